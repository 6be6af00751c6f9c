#include "diophant/cli.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "diophant/error.hpp"
#include "diophant/oracle.hpp"
#include "diophant/solver.hpp"

namespace diophant {
namespace {

constexpr std::size_t kMaxVariables = 100'000;

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool at_end() { return peek() == '\0'; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) fail(what);
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  // Unsigned digit run; callers fold signs.
  Integer digits(const char* what) {
    if (!at_digit()) fail(what);
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Integer signed_integer(const char* what) {
    bool negative = false;
    if (accept('-')) negative = true;
    else accept('+');
    Integer v = digits(what);
    return negative ? Integer(-v) : v;
  }

  [[noreturn]] void fail(const char* what) {
    skip_space();
    throw ParseError(pos_, what);
  }

  std::size_t position() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

bool is_variable(char c) { return c == 'x' || c == 'X'; }

Equation parse_symbolic(Cursor& in) {
  std::map<std::size_t, Integer> terms;
  bool first = true;
  for (;;) {
    bool negative = false;
    if (first) {
      if (in.accept('-')) negative = true;
      else in.accept('+');
    } else if (in.accept('-')) {
      negative = true;
    } else if (!in.accept('+')) {
      in.fail("'+', '-' or '='");
    }
    first = false;

    Integer coeff = 1;
    const bool explicit_coeff = in.at_digit();
    if (explicit_coeff) {
      coeff = in.digits("coefficient");
      in.accept('*');
    }
    if (!is_variable(in.peek())) in.fail(explicit_coeff ? "variable" : "coefficient or variable");
    in.accept(in.peek());
    const std::size_t index_pos = in.position();
    const Integer index = in.digits("variable index");
    if (index < 1 || index > Integer(static_cast<unsigned long>(kMaxVariables))) {
      throw ParseError(index_pos, "variable index in [1, " + std::to_string(kMaxVariables) + "]");
    }
    terms[index.get_ui()] += negative ? Integer(-coeff) : coeff;

    if (in.peek() == '=') break;
  }
  in.expect('=', "'='");
  Equation eq;
  eq.rhs = in.signed_integer("integer right-hand side");
  if (!in.at_end()) in.fail("end of input");
  eq.coeffs.assign(terms.rbegin()->first, 0);
  for (auto& [i, c] : terms) eq.coeffs[i - 1] = c;
  return eq;
}

Equation parse_list(Cursor& in) {
  Equation eq;
  do {
    eq.coeffs.push_back(in.signed_integer("integer coefficient"));
  } while (in.accept(','));
  in.expect('=', "',' or '='");
  eq.rhs = in.signed_integer("integer right-hand side");
  if (!in.at_end()) in.fail("end of input");
  return eq;
}

nlohmann::json strings(std::span<const Integer> v) {
  auto j = nlohmann::json::array();
  for (const auto& x : v) j.push_back(x.get_str());
  return j;
}

IntVector integers(const nlohmann::json& j) {
  IntVector v;
  for (const auto& x : j) v.emplace_back(x.get<std::string>());
  return v;
}

SolveMode mode_from_string(std::string_view s) {
  for (SolveMode m : {SolveMode::kRaw, SolveMode::kCanonical, SolveMode::kFormA,
                      SolveMode::kFormB, SolveMode::kOracle}) {
    if (to_string(m) == s) return m;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown mode '" + std::string(s) + "'");
}

std::size_t max_bits(std::span<const Integer> v) {
  std::size_t bits = 0;
  for (const auto& x : v) bits = std::max(bits, bit_length(x));
  return bits;
}

std::string tuple(std::span<const Integer> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].get_str();
  }
  return s + ")";
}

// "c0 + c1 t_1 - c2 t_2" with unit and zero coefficients folded.
std::string latex_affine(const Integer& constant, const std::vector<Integer>& coeffs) {
  std::string s;
  if (constant != 0) s = constant.get_str();
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    const Integer& c = coeffs[m];
    if (c == 0) continue;
    const Integer mag = abs(c);
    if (s.empty()) s = c < 0 ? "-" : "";
    else s += c < 0 ? " - " : " + ";
    if (mag != 1) s += mag.get_str();
    s += "t_{" + std::to_string(m + 1) + "}";
  }
  return s.empty() ? "0" : s;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotSolvable: return 1;
    case ErrorCode::kRawFormTooLarge:
    case ErrorCode::kFactorizationLimitExceeded: return 3;
    default: return 2;
  }
}

void emit(const SolveReport& r, bool as_json, bool as_latex, std::ostream& out) {
  if (as_json) out << to_json(r).dump(2) << '\n';
  else if (as_latex) out << to_latex(r);
  else out << to_text(r);
}

}  // namespace

Equation parse_equation(std::string_view text) {
  Cursor in(text);
  const bool symbolic = std::any_of(text.begin(), text.end(), is_variable);
  return symbolic ? parse_symbolic(in) : parse_list(in);
}

IntVector parse_integer_list(std::string_view text) {
  Cursor in(text);
  IntVector v;
  if (in.at_end()) return v;
  do {
    v.push_back(in.signed_integer("integer"));
  } while (in.accept(','));
  if (!in.at_end()) in.fail("',' or end of input");
  return v;
}

std::string format_equation(const Equation& eq) {
  std::string s;
  for (std::size_t i = 0; i < eq.size(); ++i) {
    const Integer& c = eq.coeffs[i];
    if (c == 0) continue;
    if (s.empty()) s = c < 0 ? "-" : "";
    else s += c < 0 ? " - " : " + ";
    s += Integer(abs(c)).get_str() + "x" + std::to_string(i + 1);
  }
  if (s.empty()) s = "0";
  return s + " = " + eq.rhs.get_str();
}

SolveReport make_report(const Equation& eq, const GeneralSolution& sol) {
  SolveReport r;
  r.equation = eq;
  r.mode = sol.mode;
  r.particular = sol.particular;
  r.basis = sol.basis;
  r.verified = verify(eq, sol.particular);
  r.max_bits = max_bits(sol.particular);
  for (const auto& b : sol.basis) r.max_bits = std::max(r.max_bits, max_bits(b));
  return r;
}

nlohmann::json to_json(const SolveReport& r) {
  nlohmann::json j;
  j["equation"] = {{"coeffs", strings(r.equation.coeffs)}, {"rhs", r.equation.rhs.get_str()}};
  j["mode"] = std::string(to_string(r.mode));
  j["particular"] = strings(r.particular);
  j["basis"] = nlohmann::json::array();
  for (const auto& b : r.basis) j["basis"].push_back(strings(b));
  j["verified"] = r.verified;
  j["max_bits"] = r.max_bits;
  if (r.oracle_checked) j["oracle_checked"] = *r.oracle_checked;
  if (r.params) j["params"] = strings(*r.params);
  if (r.point) j["point"] = strings(*r.point);
  if (r.error) j["error"] = *r.error;
  return j;
}

SolveReport report_from_json(const nlohmann::json& j) {
  SolveReport r;
  r.equation.coeffs = integers(j.at("equation").at("coeffs"));
  r.equation.rhs = Integer(j.at("equation").at("rhs").get<std::string>());
  r.mode = mode_from_string(j.at("mode").get<std::string>());
  r.particular = integers(j.at("particular"));
  for (const auto& b : j.at("basis")) r.basis.push_back(integers(b));
  r.verified = j.at("verified").get<bool>();
  r.max_bits = j.at("max_bits").get<std::size_t>();
  if (j.contains("oracle_checked")) r.oracle_checked = j["oracle_checked"].get<bool>();
  if (j.contains("params")) r.params = integers(j["params"]);
  if (j.contains("point")) r.point = integers(j["point"]);
  if (j.contains("error")) r.error = j["error"].get<std::string>();
  return r;
}

std::string to_text(const SolveReport& r) {
  std::ostringstream s;
  s << "equation: " << format_equation(r.equation) << '\n'
    << "mode: " << to_string(r.mode) << '\n'
    << "particular: " << tuple(r.particular) << '\n'
    << "basis:";
  if (r.basis.empty()) s << " (none)";
  s << '\n';
  for (std::size_t m = 0; m < r.basis.size(); ++m) {
    s << "  t" << m + 1 << ": " << tuple(r.basis[m]) << '\n';
  }
  s << "verified: " << (r.verified ? "true" : "false") << '\n';
  if (r.oracle_checked) s << "oracle_checked: " << (*r.oracle_checked ? "true" : "false") << '\n';
  if (r.params) s << "params: " << tuple(*r.params) << '\n';
  if (r.point) {
    s << "point: " << tuple(*r.point) << '\n'
      << "point_verified: " << (verify(r.equation, *r.point) ? "true" : "false") << '\n';
  }
  s << "max_bits: " << r.max_bits << '\n';
  return s.str();
}

std::string to_latex(const SolveReport& r) {
  std::ostringstream s;
  s << "\\left\\{\\begin{array}{rl}\n";
  const std::size_t n = r.particular.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Integer> coeffs;
    coeffs.reserve(r.basis.size());
    for (const auto& b : r.basis) coeffs.push_back(b[k]);
    s << "x_{" << k + 1 << "} = & " << latex_affine(r.particular[k], coeffs)
      << (k + 1 < n ? " \\\\\n" : "\n");
  }
  s << "\\end{array}\\right.\n";
  if (!r.basis.empty()) {
    s << "% t_{1}";
    if (r.basis.size() > 2) s << ", \\ldots";
    if (r.basis.size() > 1) s << ", t_{" << r.basis.size() << "}";
    s << " arbitrary integers\n";
  }
  return s.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact integer solution families of linear Diophantine equations", "diophant"};
  app.require_subcommand(1);

  std::string equation_text;
  std::string mode_text = "canonical";
  std::size_t guard_bits = std::size_t{1} << 20;
  std::string params_text;
  std::string vector_text;
  bool as_json = false;
  bool as_latex = false;
  bool oracle_check = false;
  unsigned long power_m = 0;
  unsigned long power_n = 0;

  auto* solve_cmd = app.add_subcommand("solve", "Solve an equation and print its parametric family");
  solve_cmd->add_option("equation", equation_text, "e.g. \"2x1 + 3x2 = 1\" or \"2, 3 = 1\"")->required();
  solve_cmd->add_option("--mode", mode_text, "raw, canonical, form-a or form-b")
      ->check(CLI::IsMember({"raw", "canonical", "form-a", "form-b"}));
  solve_cmd->add_option("--guard-bits", guard_bits, "Bit limit for raw-form intermediates")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--params", params_text, "Parameter values \"t1,t2,...\" to evaluate");
  solve_cmd->add_flag("--json", as_json, "Machine-readable output");
  solve_cmd->add_flag("--latex", as_latex, "LaTeX rendering of the family");
  solve_cmd->add_flag("--oracle-check", oracle_check, "Cross-check against the extended-Euclid solver");

  auto* verify_cmd = app.add_subcommand("verify", "Check a candidate vector against an equation");
  verify_cmd->add_option("equation", equation_text)->required();
  verify_cmd->add_option("vector", vector_text, "e.g. \"2,-1\"")->required();
  verify_cmd->add_flag("--json", as_json);

  auto* power_cmd = app.add_subcommand("power", "Both closed forms for 2^m x + 3^n y = 1");
  power_cmd->add_option("--m", power_m)->required()->check(CLI::PositiveNumber);
  power_cmd->add_option("--n", power_n)->required()->check(CLI::PositiveNumber);
  power_cmd->add_option("--guard-bits", guard_bits)->check(CLI::PositiveNumber);
  power_cmd->add_flag("--json", as_json);

  auto* oracle_cmd = app.add_subcommand("oracle", "Solve with the extended-Euclid reference solver");
  oracle_cmd->add_option("equation", equation_text)->required();
  oracle_cmd->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*solve_cmd) {
      if (as_json && as_latex) {
        err << "--json and --latex are mutually exclusive\n";
        return 2;
      }
      const Equation eq = parse_equation(equation_text);
      RawOptions options;
      options.guard_bits = guard_bits;
      const GeneralSolution sol = solve(eq, mode_from_string(mode_text), options);
      SolveReport report = make_report(eq, sol);
      if (solve_cmd->count("--params") > 0) {
        report.params = parse_integer_list(params_text);
        report.point = evaluate(sol, *report.params);
        report.max_bits = std::max(report.max_bits, max_bits(*report.point));
      }
      if (oracle_check) {
        const GeneralSolution reference = solve_with(eq, SolveMode::kOracle, euclid_solve);
        report.oracle_checked = lattice_equivalent(sol, reference, eq);
      }
      emit(report, as_json, as_latex, out);
      if (report.oracle_checked == false) {
        err << "error: solution family disagrees with the extended-Euclid oracle\n";
        return 4;
      }
      return 0;
    }

    if (*verify_cmd) {
      const Equation eq = parse_equation(equation_text);
      const IntVector x = parse_integer_list(vector_text);
      const bool ok = verify(eq, x);
      if (as_json) {
        out << nlohmann::json{{"equation", {{"coeffs", strings(eq.coeffs)}, {"rhs", eq.rhs.get_str()}}},
                              {"vector", strings(x)},
                              {"verified", ok}}
                   .dump(2)
            << '\n';
      } else {
        out << (ok ? "true" : "false") << '\n';
      }
      return ok ? 0 : 1;
    }

    if (*power_cmd) {
      const PowerForms forms = power_equation(power_m, power_n, guard_bits);
      Equation eq;
      eq.coeffs = {Integer(1) << power_m, 0};
      mpz_ui_pow_ui(eq.coeffs[1].get_mpz_t(), 3, power_n);
      eq.rhs = 1;
      const SolveReport a = make_report(eq, forms.form_a);
      const SolveReport b = make_report(eq, forms.form_b);
      if (as_json) {
        out << nlohmann::json{{"m", power_m}, {"n", power_n}, {"solutions", {to_json(a), to_json(b)}}}
                   .dump(2)
            << '\n';
      } else {
        out << to_text(a) << '\n' << to_text(b);
      }
      return 0;
    }

    if (*oracle_cmd) {
      const Equation eq = parse_equation(equation_text);
      const GeneralSolution sol = solve_with(eq, SolveMode::kOracle, euclid_solve);
      emit(make_report(eq, sol), as_json, false, out);
      return 0;
    }
  } catch (const Error& e) {
    if (as_json) {
      out << nlohmann::json{{"error", {{"kind", std::string(to_string(e.code()))}, {"message", e.what()}}}}.dump(2)
          << '\n';
    }
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return 4;
  }
  return 2;
}

}  // namespace diophant
