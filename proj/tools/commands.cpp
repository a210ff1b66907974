#include "commands.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "trimoments/kappa.hpp"
#include "trimoments/moments.hpp"
#include "trimoments/parallel.hpp"
#include "trimoments/partition.hpp"
#include "trimoments/polytope.hpp"
#include "trimoments/randmat.hpp"

namespace trimoments::cli {

namespace {

constexpr std::size_t kMaxExpressionLength = 4096;

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  Word parse() {
    std::vector<Letter> letters = sequence(false);
    return Word(std::move(letters));
  }

 private:
  std::vector<Letter> sequence(bool nested) {
    std::vector<Letter> out;
    for (;;) {
      skip_space();
      if (pos_ == text_.size()) {
        if (nested) fail("missing ')'");
        return out;
      }
      if (text_[pos_] == ')') {
        if (!nested) fail("unmatched ')'");
        return out;
      }
      std::vector<Letter> item = atom();
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        const unsigned times = exponent();
        if (item.size() * times > kMaxExpressionLength) fail("word too long");
        std::vector<Letter> repeated;
        for (unsigned t = 0; t < times; ++t) repeated.insert(repeated.end(), item.begin(), item.end());
        item = std::move(repeated);
      }
      out.insert(out.end(), item.begin(), item.end());
      if (out.size() > kMaxExpressionLength) fail("word too long");
    }
  }

  std::vector<Letter> atom() {
    const char c = text_[pos_];
    if (c == 'T' || c == 't') {
      ++pos_;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        return {Letter::TStar};
      }
      return {Letter::T};
    }
    if (c == '(') {
      ++pos_;
      std::vector<Letter> inner = sequence(true);
      ++pos_;  // ')'
      return inner;
    }
    if (c == '*') fail("'*' must follow T");
    fail(std::string("unexpected character '") + c + "'");
  }

  unsigned exponent() {
    skip_space();
    const std::size_t start = pos_;
    unsigned long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      if (value > kMaxExpressionLength) fail("exponent too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected an exponent after '^'");
    return static_cast<unsigned>(value);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse word \"" + std::string(text_) + "\" at position " +
                     std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Json poly_json(const Poly& p) {
  Json coefficients = Json::array();
  for (const auto& c : p.coefficients()) coefficients.push_back(c.str());
  return {{"text", p.str()}, {"coefficients", coefficients}};
}

Json rational_json(const Rational& r) { return r.str(); }

struct ResolvedWord {
  Word word;
  bool from_power = false;
};

ResolvedWord resolve_word(const Options& opt) {
  if (opt.word && (opt.k || opt.n)) {
    throw std::invalid_argument("give either --word or --k/--n, not both");
  }
  if (opt.word) return {parse_word_expression(*opt.word), false};
  if (opt.k && opt.n) return {power_word(*opt.k, *opt.n), true};
  throw std::invalid_argument("a word is required: --word, or --k and --n");
}

void check_bound(const Word& w, int max_nk) {
  const auto half = static_cast<int>(w.size() / 2);
  if (half > max_nk) {
    throw BoundError("word of length " + std::to_string(w.size()) +
                     " exceeds the enumeration bound nk <= " + std::to_string(max_nk) +
                     " (raise it with --max-nk)");
  }
}

int require(const std::optional<int>& v, const char* flag) {
  if (!v) throw std::invalid_argument(std::string(flag) + " is required");
  return *v;
}

Rational exact_phi(const Word& w) { return definite_integral_01(expectation_recursive(w)); }

std::string decimal(double v) {
  std::ostringstream out;
  out.precision(10);
  out << v;
  return out.str();
}

}  // namespace

Word parse_word_expression(std::string_view text) { return ExpressionParser(text).parse(); }

Report cmd_moment(const Options& opt) {
  Report r;
  r.command = "moment";
  const auto [w, from_power] = resolve_word(opt);
  check_bound(w, opt.max_nk);
  const std::string method = opt.method.empty() ? "direct" : opt.method;
  if (method != "direct" && method != "recursive" && method != "integration") {
    throw std::invalid_argument("moment supports --method direct, recursive or integration");
  }
  if (method == "integration" && !from_power) {
    throw std::invalid_argument("--method integration needs --k and --n");
  }

  const Poly direct = expectation_direct(w, opt.threads);
  const Poly recursive = expectation_recursive(w);
  std::optional<Poly> integration;
  if (from_power) integration = expectation_via_integration(*opt.k, *opt.n);
  const Poly& chosen =
      method == "direct" ? direct : (method == "recursive" ? recursive : *integration);
  const Rational phi = definite_integral_01(chosen);

  r.data["word"] = w.str();
  r.data["length"] = w.size();
  r.data["method"] = method;
  r.data["E"] = poly_json(chosen);
  r.data["phi"] = rational_json(phi);

  r.check("direct = recursive", direct == recursive);
  if (integration) {
    r.check("direct = integration", direct == *integration);
    const Rational formula = main_formula(*opt.k, *opt.n);
    r.data["formula"] = rational_json(formula);
    r.check("phi = n^{nk}/(nk+1)!", phi == formula, phi.str() + " vs " + formula.str());
  }
  return r;
}

Report cmd_verify(const Options& opt) {
  Report r;
  r.command = "verify";
  const std::string method = opt.method.empty() ? "direct" : opt.method;
  if (method != "direct" && method != "recursive" && method != "integration" &&
      method != "composition") {
    throw std::invalid_argument(
        "verify supports --method direct, recursive, integration or composition");
  }
  struct Case {
    int k, n;
    Rational phi;
  };
  std::vector<Case> cases;
  for (int nk = 1; nk <= opt.max_nk; ++nk) {
    for (int k = 1; k <= nk; ++k) {
      if (nk % k != 0) continue;
      const int n = nk / k;
      if ((opt.k && *opt.k != k) || (opt.n && *opt.n != n)) continue;
      cases.push_back({k, n, {}});
    }
  }
  if (cases.empty()) throw std::invalid_argument("no (k, n) with nk <= --max-nk matches");

  parallel_for(cases.size(), opt.threads, [&](std::size_t i) {
    auto& c = cases[i];
    if (method == "direct") {
      c.phi = phi_word(power_word(c.k, c.n));
    } else if (method == "recursive") {
      c.phi = exact_phi(power_word(c.k, c.n));
    } else if (method == "integration") {
      c.phi = definite_integral_01(expectation_via_integration(c.k, c.n));
    } else {
      c.phi = volume_exact(c.k, c.n);
    }
  });

  Json rows = Json::array();
  std::string failures;
  std::size_t agreed = 0;
  for (const auto& c : cases) {
    const Rational formula = main_formula(c.k, c.n);
    const bool equal = c.phi == formula;
    agreed += equal;
    if (!equal) failures += " (k,n)=(" + std::to_string(c.k) + "," + std::to_string(c.n) + ")";
    rows.push_back({{"k", c.k},
                    {"n", c.n},
                    {"nk", c.k * c.n},
                    {"phi", c.phi.str()},
                    {"formula", formula.str()},
                    {"equal", equal}});
  }
  r.data["method"] = method;
  r.data["max_nk"] = opt.max_nk;
  r.data["cases"] = rows;
  r.check("phi[(T^k T*^k)^n] = n^{nk}/(nk+1)!", agreed == cases.size(),
          std::to_string(agreed) + "/" + std::to_string(cases.size()) + " cases" +
              (failures.empty() ? "" : "; mismatch:" + failures));
  return r;
}

Report cmd_identity(const Options& opt) {
  Report r;
  r.command = "identity";
  const int n = require(opt.n, "--n");
  const int k = require(opt.k, "--k");
  const BigInt lhs = identity_lhs(n, k);
  r.data["n"] = n;
  r.data["k"] = k;
  r.data["lhs"] = to_string(lhs);

  const bool displayed = n >= 2 && n <= 4;
  if (displayed) {
    const IdentityEvaluation e = identity_rhs_detailed(n, k);
    const BigInt rhs = e.total();
    Json sums = Json::array();
    std::size_t terms = 0;
    for (const auto& s : e.sums) {
      sums.push_back({{"weight", to_string(s.weight)}, {"value", to_string(s.value)},
                      {"terms", s.terms}});
      terms += s.terms;
    }
    r.data["rhs"] = to_string(rhs);
    r.data["equal"] = rhs == lhs;
    r.data["term_count"] = terms;
    r.data["sums"] = sums;
    r.check("displayed right-hand side = n^{nk}", rhs == lhs);
  }

  if (!displayed || n * k <= opt.max_nk) {
    const auto [bridge_lhs, bridge_rhs] = identity_from_moments(n, k, opt.max_nk, opt.threads);
    const bool equal = bridge_rhs == Rational(bridge_lhs);
    r.data["bridge"] = {{"lhs", to_string(bridge_lhs)}, {"rhs", bridge_rhs.str()},
                        {"equal", equal}};
    r.check("(nk+1)! phi[(T^k T*^k)^n] = n^{nk}", equal);
  } else {
    r.data["bridge"] = "skipped: nk exceeds --max-nk";
  }

  if (opt.terms) {
    const auto terms = partition_terms(n, k, opt.max_nk);
    Json rows = Json::array();
    Rational sum;
    for (const auto& [p, value] : terms) {
      rows.push_back({{"partition", p.str()}, {"phi", value.str()}});
      sum += value;
    }
    r.data["partition_count"] = terms.size();
    r.data["partition_terms"] = rows;
    r.check("sum of partition terms = n^{nk}/(nk+1)!", sum == main_formula(k, n),
            sum.str());
    if (n == 3) {
      const std::size_t shapes = shape_family_count_n3(k);
      r.data["shape_family_count"] = shapes;
      r.check("admissible partitions = shape-family index tuples", shapes == terms.size(),
              std::to_string(terms.size()) + " vs " + std::to_string(shapes));
    }
  }
  return r;
}

Report cmd_volume(const Options& opt) {
  Report r;
  r.command = "volume";
  const int k = require(opt.k, "--k");
  const int n = require(opt.n, "--n");
  if (k < 1 || n < 1) throw std::invalid_argument("volume requires k, n >= 1");
  const std::string method = opt.method.empty() ? "composition" : opt.method;
  r.data["k"] = k;
  r.data["n"] = n;
  r.data["method"] = method;
  const Rational exact = volume_exact(k, n);
  const Rational formula = main_formula(k, n);

  if (method == "composition") {
    r.data["value"] = exact.str();
    r.data["formula"] = formula.str();
    r.check("vol V_{k,n} = n^{nk}/(nk+1)!", exact == formula);
    const Poly region = volume_polynomial(k, n);
    r.data["polynomial"] = poly_json(region);
    if (n * k <= opt.max_nk) {
      r.check("region polynomial = E[(T^k T*^k)^n]",
              region == expectation_direct(power_word(k, n), opt.threads));
    }
  } else if (method == "montecarlo") {
    const std::uint64_t samples = opt.samples.value_or(100000);
    if (samples < 1) throw std::invalid_argument("--samples must be >= 1");
    const MonteCarloEstimate est = volume_montecarlo(k, n, samples, opt.seed, opt.threads);
    const double diff = std::abs(est.estimate - exact.to_double());
    r.data["estimate"] = est.estimate;
    r.data["stderr"] = est.std_error;
    r.data["samples"] = est.samples;
    r.data["seed"] = est.seed;
    r.data["hits"] = est.hits;
    r.data["generator"] = est.generator;
    r.data["exact"] = exact.str();
    r.data["z_score"] = est.std_error > 0 ? Json(diff / est.std_error) : Json(nullptr);
    r.check("|estimate - exact| <= 4 stderr", diff <= 4.0 * est.std_error,
            "difference " + decimal(diff));
  } else {
    throw std::invalid_argument("volume supports --method composition or montecarlo");
  }
  return r;
}

Report cmd_randmat(const Options& opt) {
  Report r;
  r.command = "randmat";
  const Word w = resolve_word(opt).word;
  MatrixEnsembleConfig cfg;
  cfg.dim = opt.dim;
  cfg.samples = static_cast<int>(std::min<std::uint64_t>(
      opt.samples.value_or(200), static_cast<std::uint64_t>(std::numeric_limits<int>::max())));
  cfg.seed = opt.seed;
  cfg.threads = opt.threads;
  const MomentEstimate est = sample_moment(w, cfg);

  r.data["word"] = w.str();
  r.data["N"] = cfg.dim;
  r.data["samples"] = est.samples;
  r.data["seed"] = cfg.seed;
  r.data["entry_model"] = to_string(cfg.entry_model);
  r.data["generator"] = random_matrix_generator_name();
  r.data["mean"] = est.mean;
  r.data["imag_mean"] = est.imag_mean;
  r.data["stderr"] = est.std_error;
  if (static_cast<int>(w.size() / 2) <= opt.max_nk) {
    const Rational exact = exact_phi(w);
    const double diff = std::abs(est.mean - exact.to_double());
    r.data["exact"] = exact.str();
    r.data["z_score"] = est.std_error > 0 ? Json(diff / est.std_error) : Json(nullptr);
    r.check("|mean - phi| <= 4 stderr + 0.05", diff <= 4.0 * est.std_error + 0.05,
            "difference " + decimal(diff));
  } else {
    r.data["exact"] = nullptr;
  }
  return r;
}

Report cmd_enumerate(const Options& opt) {
  Report r;
  r.command = "enumerate";
  const Word w = resolve_word(opt).word;
  check_bound(w, opt.max_nk);
  const auto partitions = admissible_partitions(w);
  Json rows = Json::array();
  Rational sum;
  for (const auto& p : partitions) {
    const Poly value = kappa_nested(p, w);
    const Rational phi = definite_integral_01(value);
    sum += phi;
    rows.push_back({{"partition", p.str()}, {"kappa", value.str()}, {"phi", phi.str()}});
  }
  r.data["word"] = w.str();
  r.data["length"] = w.size();
  r.data["noncrossing_pair_partitions"] =
      w.size() % 2 == 0 ? enumerate_nc2(static_cast<int>(w.size() / 2)).size() : 0;
  r.data["admissible"] = partitions.size();
  r.data["partitions"] = rows;
  r.data["phi"] = sum.str();
  const Rational phi = exact_phi(w);
  r.check("sum over partitions = phi (recursive)", sum == phi, sum.str() + " vs " + phi.str());
  return r;
}

}  // namespace trimoments::cli
