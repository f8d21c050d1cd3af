#include "cubic/output.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cubic/rs_decomposition.hpp"

namespace cubic {

using nlohmann::json;

OutputRecord make_record(std::string input, std::string method, const GeneralCubic& cubic,
                         const RootTriple& roots) {
  OutputRecord record;
  record.input = std::move(input);
  record.method = std::move(method);
  const Depressed depressed = depress(cubic);
  record.p = depressed.cubic.p;
  record.q = depressed.cubic.q;
  record.shift = depressed.shift.delta;
  const RsPair pair = compute_rs(depressed.cubic);
  record.case_tag = std::string(to_string(pair.tag));
  if (!pair.degenerate()) {
    record.r = std::array{pair.r.real(), pair.r.imag()};
    record.s = std::array{pair.s.real(), pair.s.imag()};
  }
  if (pair.exact) record.exact_rs = std::array{pair.exact->first.to_string(), pair.exact->second.to_string()};
  for (std::size_t i = 0; i < 3; ++i) {
    record.roots.push_back({roots.roots[i].real(), roots.roots[i].imag()});
    record.residuals[i] = std::abs(cubic.evaluate(roots.roots[i]));
  }
  record.multiplicity = roots.multiplicity;
  record.trig = roots.trig;
  if (roots.exact) {
    std::array<std::string, 3> exact;
    for (std::size_t i = 0; i < 3; ++i) exact[i] = (*roots.exact)[i].to_string();
    record.exact = exact;
  }
  return record;
}

namespace {

template <typename T>
json optional_json(const std::optional<T>& value) {
  return value ? json(*value) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

void to_json(json& j, const OutputRecord& record) {
  j = json{
      {"input", record.input},
      {"method", record.method},
      {"depressed", {{"p", record.p}, {"q", record.q}, {"shift", record.shift}}},
      {"rs",
       {{"case", record.case_tag},
        {"r", optional_json(record.r)},
        {"s", optional_json(record.s)},
        {"exact", optional_json(record.exact_rs)}}},
      {"roots", record.roots},
      {"residuals", record.residuals},
      {"exact", optional_json(record.exact)},
  };
  json multiplicity = json::array();
  for (const auto& m : record.multiplicity) multiplicity.push_back({{"index", m.index}, {"count", m.count}});
  j["multiplicity"] = multiplicity;
  if (record.trig) {
    j["trig"] = {{"amplitude", record.trig->amplitude}, {"theta", record.trig->theta},
                 {"offsets", record.trig->offsets},     {"k", record.trig->k},
                 {"translation", record.trig->translation}};
  } else {
    j["trig"] = nullptr;
  }
  if (record.verification) {
    const auto& v = *record.verification;
    j["verification"] = {{"residuals", v.residuals},
                         {"vieta_errors", v.vieta_errors},
                         {"tolerance", v.tolerance},
                         {"pass", v.pass}};
  }
  if (record.comparison) {
    const auto& c = *record.comparison;
    j["comparison"] = {{"max_matched_distance", c.max_matched_distance},
                       {"perm", c.perm},
                       {"cardano_roots", c.cardano_roots},
                       {"chen_residuals", c.chen_residuals},
                       {"cardano_residuals", c.cardano_residuals}};
  }
  if (record.note) j["note"] = *record.note;
}

void from_json(const json& j, OutputRecord& record) {
  record.input = j.at("input").get<std::string>();
  record.method = j.at("method").get<std::string>();
  const json& depressed = j.at("depressed");
  record.p = depressed.at("p").get<double>();
  record.q = depressed.at("q").get<double>();
  record.shift = depressed.at("shift").get<double>();
  const json& rs = j.at("rs");
  record.case_tag = rs.at("case").get<std::string>();
  record.r = optional_from<std::array<double, 2>>(rs, "r");
  record.s = optional_from<std::array<double, 2>>(rs, "s");
  record.exact_rs = optional_from<std::array<std::string, 2>>(rs, "exact");
  record.roots = j.at("roots").get<std::vector<std::array<double, 2>>>();
  record.residuals = j.at("residuals").get<std::array<double, 3>>();
  record.exact = optional_from<std::array<std::string, 3>>(j, "exact");
  record.multiplicity.clear();
  for (const auto& m : j.at("multiplicity")) {
    record.multiplicity.push_back({m.at("index").get<std::size_t>(), m.at("count").get<int>()});
  }
  record.trig.reset();
  if (j.contains("trig") && !j.at("trig").is_null()) {
    const json& t = j.at("trig");
    TrigForm trig;
    trig.amplitude = t.at("amplitude").get<double>();
    trig.theta = t.at("theta").get<double>();
    trig.offsets = t.at("offsets").get<std::array<double, 3>>();
    trig.k = t.at("k").get<std::array<int, 3>>();
    trig.translation = t.at("translation").get<double>();
    record.trig = trig;
  }
  record.verification.reset();
  if (j.contains("verification")) {
    const json& v = j.at("verification");
    VerificationReport report;
    report.residuals = v.at("residuals").get<std::array<double, 3>>();
    report.vieta_errors = v.at("vieta_errors").get<std::array<double, 3>>();
    report.tolerance = v.at("tolerance").get<double>();
    report.pass = v.at("pass").get<bool>();
    record.verification = report;
  }
  record.comparison.reset();
  if (j.contains("comparison")) {
    const json& c = j.at("comparison");
    OutputRecord::Comparison comparison;
    comparison.max_matched_distance = c.at("max_matched_distance").get<double>();
    comparison.perm = c.at("perm").get<std::array<std::size_t, 3>>();
    comparison.cardano_roots = c.at("cardano_roots").get<std::vector<std::array<double, 2>>>();
    comparison.chen_residuals = c.at("chen_residuals").get<std::array<double, 3>>();
    comparison.cardano_residuals = c.at("cardano_residuals").get<std::array<double, 3>>();
    record.comparison = comparison;
  }
  record.note = optional_from<std::string>(j, "note");
}

std::string format_number(double value, int precision) {
  if (value == 0.0) return "0";  // also folds -0
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value, std::chars_format::general, precision);
  return std::string(buffer, result.ptr);
}

std::string format_complex(double re, double im, int precision) {
  if (im == 0.0) return format_number(re, precision);
  std::string out = re == 0.0 ? "" : format_number(re, precision) + (im < 0.0 ? " - " : " + ");
  if (re == 0.0 && im < 0.0) out = "-";
  return out + format_number(std::abs(im), precision) + "*i";
}

std::string format_angle(double angle, int precision) {
  const double turns = angle / std::numbers::pi;
  for (int den = 1; den <= 72; ++den) {
    const double num = std::round(turns * den);
    if (std::abs(turns * den - num) > 1e-10 * den) continue;
    const auto n = static_cast<long long>(num);  // first match has the reduced denominator
    if (n == 0) return "0";
    std::string out = n == 1 ? "pi" : n == -1 ? "-pi" : std::to_string(n) + "*pi";
    if (den != 1) out += "/" + std::to_string(den);
    return out;
  }
  return format_number(angle, precision);
}

namespace {

std::string header(const OutputRecord& record, int precision) {
  std::ostringstream out;
  out << "input: " << record.input << "\n";
  out << "method: " << record.method << "\n";
  out << "depressed: p = " << format_number(record.p, precision) << ", q = " << format_number(record.q, precision);
  if (record.shift != 0.0) {
    out << ", x = y " << (record.shift < 0.0 ? "+ " : "- ") << format_number(std::abs(record.shift), precision);
  }
  out << "\n";
  out << "case: " << record.case_tag;
  if (record.r && record.s) {
    out << " (r = " << format_complex((*record.r)[0], (*record.r)[1], precision)
        << ", s = " << format_complex((*record.s)[0], (*record.s)[1], precision) << ")";
  }
  out << "\n";
  if (record.note) out << "note: " << *record.note << "\n";
  return out.str();
}

std::string footer(const OutputRecord& record, int precision) {
  std::ostringstream out;
  if (record.comparison) {
    const auto& c = *record.comparison;
    out << "cardano:";
    for (const auto& z : c.cardano_roots) out << " [" << format_complex(z[0], z[1], precision) << "]";
    out << "\nmax matched distance (chen vs cardano) = " << format_number(c.max_matched_distance, 3) << "\n";
  }
  if (record.verification) {
    const auto& v = *record.verification;
    out << "verification: " << (v.pass ? "pass" : "FAIL") << " (tolerance " << format_number(v.tolerance, 3)
        << ")\n  residuals:";
    for (double r : v.residuals) out << " " << format_number(r, 3);
    out << "\n  vieta errors:";
    for (double e : v.vieta_errors) out << " " << format_number(e, 3);
    out << "\n";
  }
  return out.str();
}

}  // namespace

std::string format_text(const OutputRecord& record, int precision) {
  std::ostringstream out;
  out << header(record, precision);
  for (std::size_t i = 0; i < record.roots.size(); ++i) {
    out << "x" << i + 1 << " = " << format_complex(record.roots[i][0], record.roots[i][1], precision) << "\n";
  }
  for (const auto& m : record.multiplicity) {
    out << "x" << m.index + 1 << " has multiplicity " << m.count << "\n";
  }
  out << footer(record, precision);
  return out.str();
}

std::string format_trig(const OutputRecord& record, int precision) {
  std::ostringstream out;
  out << header(record, precision);
  if (!record.trig) {
    out << "no trigonometric form: the roots are not all given by the three-real-root formula\n";
    for (std::size_t i = 0; i < record.roots.size(); ++i) {
      out << "x" << i + 1 << " = " << format_complex(record.roots[i][0], record.roots[i][1], precision) << "\n";
    }
    out << footer(record, precision);
    return out.str();
  }
  const TrigForm& t = *record.trig;
  out << "amplitude = -2*sqrt(rs) = " << format_number(t.amplitude, precision) << "\n";
  out << "theta = Arg(r) = " << format_angle(t.theta, precision) << " = " << format_number(t.theta, precision)
      << "\n";
  for (std::size_t i = 0; i < 3; ++i) {
    out << "x" << i + 1 << " = " << format_number(t.amplitude, precision) << "*cos("
        << format_angle(t.offsets[i], precision) << ")";
    if (t.translation != 0.0) {
      out << (t.translation < 0.0 ? " - " : " + ") << format_number(std::abs(t.translation), precision);
    }
    out << " = " << format_complex(record.roots[i][0], record.roots[i][1], precision) << "\n";
  }
  out << footer(record, precision);
  return out.str();
}

std::string format_exact(const OutputRecord& record, int precision) {
  std::ostringstream out;
  out << header(record, precision);
  if (record.exact_rs) out << "exact r, s = " << (*record.exact_rs)[0] << ", " << (*record.exact_rs)[1] << "\n";
  for (std::size_t i = 0; i < record.roots.size(); ++i) {
    out << "x" << i + 1 << " = ";
    if (record.exact) {
      out << (*record.exact)[i];
    } else {
      out << format_complex(record.roots[i][0], record.roots[i][1], precision) << " (no exact form)";
    }
    out << "\n";
  }
  out << footer(record, precision);
  return out.str();
}

}  // namespace cubic
