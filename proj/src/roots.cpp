#include "cubic/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace cubic {

double TrigForm::evaluate(std::size_t i) const {
  return amplitude * std::cos(offsets.at(i)) + translation;
}

int expected_real_count(CaseTag tag, double p, double q) {
  switch (tag) {
    case CaseTag::Equal:
    case CaseTag::ConjugatePair:
      return 3;
    case CaseTag::RealDistinct:
      return 1;
    case CaseTag::DegenerateQ0:
      return p <= 0.0 ? 3 : 1;
    case CaseTag::DegenerateP0:
      return q == 0.0 ? 3 : 1;
  }
  return 1;
}

void enforce_real_structure(std::array<ComplexValue, 3>& roots, int real_count) {
  std::array<std::size_t, 3> order{0, 1, 2};
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return std::abs(roots[i].imag()) < std::abs(roots[j].imag());
  });
  if (real_count == 3) {
    for (auto& z : roots) z.imag(0.0);
    return;
  }
  roots[order[0]].imag(0.0);
  ComplexValue& first = roots[order[1]];
  ComplexValue& second = roots[order[2]];
  const double re = (first.real() + second.real()) / 2.0;
  const double im = (std::abs(first.imag()) + std::abs(second.imag())) / 2.0;
  const bool first_upper = first.imag() > second.imag();
  first = {re, first_upper ? im : -im};
  second = {re, first_upper ? -im : im};
}

void enforce_case_structure(std::array<ComplexValue, 3>& roots, CaseTag tag, double p, double q) {
  enforce_real_structure(roots, expected_real_count(tag, p, q));
  if (tag != CaseTag::Equal) return;
  std::size_t a = 0;
  std::size_t b = 1;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (std::abs(roots[i] - roots[j]) < std::abs(roots[a] - roots[b])) {
        a = i;
        b = j;
      }
    }
  }
  roots[a] = roots[b] = (roots[a] + roots[b]) / 2.0;
}

namespace {

bool canonical_less(const ComplexValue& a, const ComplexValue& b) {
  const bool a_real = a.imag() == 0.0;
  const bool b_real = b.imag() == 0.0;
  if (a_real != b_real) return a_real;
  if (a_real) return a.real() < b.real();
  if (a.imag() != b.imag()) return a.imag() < b.imag();
  return a.real() < b.real();
}

}  // namespace

void canonicalize(RootTriple& triple) {
  std::array<std::size_t, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return canonical_less(triple.roots[i], triple.roots[j]);
  });
  const auto permute = [&order](auto& values) {
    auto copy = values;
    for (std::size_t i = 0; i < 3; ++i) values[i] = copy[order[i]];
  };
  permute(triple.roots);
  if (triple.trig) {
    permute(triple.trig->offsets);
    permute(triple.trig->k);
  }
  if (triple.exact) permute(*triple.exact);

  triple.multiplicity.clear();
  for (std::size_t i = 0; i < 3; ++i) {
    bool seen = false;
    for (std::size_t j = 0; j < i; ++j) seen = seen || triple.roots[j] == triple.roots[i];
    if (seen) continue;
    int count = 0;
    for (std::size_t j = i; j < 3; ++j) count += triple.roots[j] == triple.roots[i] ? 1 : 0;
    if (count > 1) triple.multiplicity.push_back({i, count});
  }
}

std::array<ComplexValue, 3> sorted_roots(std::array<ComplexValue, 3> roots) {
  std::sort(roots.begin(), roots.end(), [](const ComplexValue& a, const ComplexValue& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

RootMatching match_roots(const std::array<ComplexValue, 3>& a, const std::array<ComplexValue, 3>& b) {
  std::array<std::size_t, 3> perm{0, 1, 2};
  RootMatching best;
  best.max_distance = std::numeric_limits<double>::infinity();
  double best_sum = std::numeric_limits<double>::infinity();
  do {
    double worst = 0.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      const double dist = std::abs(a[i] - b[perm[i]]);
      worst = std::max(worst, dist);
      sum += dist;
    }
    if (worst < best.max_distance || (worst == best.max_distance && sum < best_sum)) {
      best.perm = perm;
      best.max_distance = worst;
      best_sum = sum;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace cubic
