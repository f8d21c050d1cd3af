#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cubic/cardano.hpp"
#include "cubic/chen.hpp"
#include "cubic/polynomial.hpp"
#include "cubic/roots.hpp"
#include "cubic/verify.hpp"

namespace cubic {

/// Everything the CLI reports for one solved input.
struct OutputRecord {
  struct Comparison {
    double max_matched_distance = 0.0;
    std::array<std::size_t, 3> perm{};
    std::vector<std::array<double, 2>> cardano_roots;
    std::array<double, 3> chen_residuals{};
    std::array<double, 3> cardano_residuals{};
  };

  std::string input;
  std::string method;
  double p = 0.0;
  double q = 0.0;
  double shift = 0.0;
  std::string case_tag;
  std::optional<std::array<double, 2>> r;
  std::optional<std::array<double, 2>> s;
  std::optional<std::array<std::string, 2>> exact_rs;
  std::vector<std::array<double, 2>> roots;
  std::vector<Multiplicity> multiplicity;
  std::optional<TrigForm> trig;
  std::optional<std::array<std::string, 3>> exact;
  std::array<double, 3> residuals{};
  std::optional<VerificationReport> verification;
  std::optional<Comparison> comparison;
  std::optional<std::string> note;
};

OutputRecord make_record(std::string input, std::string method, const GeneralCubic& cubic,
                         const RootTriple& roots);

void to_json(nlohmann::json& j, const OutputRecord& record);
void from_json(const nlohmann::json& j, OutputRecord& record);

/// Shortest of %.{precision}g, locale-independent.
std::string format_number(double value, int precision);
std::string format_complex(double re, double im, int precision);
/// angle as a rational multiple of pi when one with denominator <= 72 fits.
std::string format_angle(double angle, int precision);

std::string format_text(const OutputRecord& record, int precision);
std::string format_trig(const OutputRecord& record, int precision);
std::string format_exact(const OutputRecord& record, int precision);

}  // namespace cubic
