#include "sparse_evolve/expectation.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sparse_evolve/calculus.hpp"
#include "sparse_evolve/errors.hpp"

namespace sparse_evolve {

namespace mp = boost::multiprecision;

namespace {

HighReal to_high(const Exact& x) {
  return HighReal(mp::numerator(x)) / HighReal(mp::denominator(x));
}

std::vector<Exact> prefix_sums(std::span<const Exact> a) {
  std::vector<Exact> p(a.size() + 1, Exact(0));
  for (std::size_t i = 0; i < a.size(); ++i) p[i + 1] = p[i] + a[i];
  return p;
}

void check_order(std::size_t n) {
  if (n == 0) throw ArgumentError("exponent vector must be non-empty");
}

void check_interval(double tau0, double t) {
  if (!(tau0 > 0.0)) throw ArgumentError("tau0 must be positive");
  if (tau0 > t) throw ArgumentError("domain error: tau0 > T");
}

}  // namespace

std::string to_string(const Exact& x) {
  return mp::numerator(x).str() + "/" + mp::denominator(x).str();
}

std::vector<Exact> exponent_vector(const Alpha& alpha, std::span<const int> back_edges) {
  std::vector<Exact> out;
  out.reserve(back_edges.size());
  for (int e : back_edges) out.push_back(Exact(alpha.num() * e, alpha.den()));
  return out;
}

void check_exponents(std::span<const Exact> alphas) {
  for (const Exact& a : alphas) {
    if (a < 0) throw ArgumentError("exponents must be non-negative");
  }
  const std::vector<Exact> p = prefix_sums(alphas);
  const std::size_t n = alphas.size();
  for (std::size_t first = 0; first < n; ++first) {
    for (std::size_t len = 1; first + len <= n; ++len) {
      if (Exact(static_cast<long long>(len)) == p[first + len] - p[first]) {
        throw DegeneracyError(
            "vanishing denominator " + std::to_string(len) + " - (a_" +
            std::to_string(first + 1) + " + ... + a_" + std::to_string(first + len) + ") = 0");
      }
    }
  }
}

CoefficientTable coeff_C_closed(std::span<const Exact> alphas) {
  check_order(alphas.size());
  check_exponents(alphas);
  const int n = static_cast<int>(alphas.size());
  const std::vector<Exact> p = prefix_sums(alphas);
  CoefficientTable table;
  for (int j = 0; j <= n; ++j) {
    Exact den(1);
    for (int k = 1; k <= n - j; ++k) den *= Exact(k) - (p[j + k] - p[j]);
    for (int i = 1; i <= j; ++i) den *= Exact(i) - (p[j] - p[j - i]);
    table.c.push_back((j % 2 == 0 ? Exact(1) : Exact(-1)) / den);
    table.t_exponents.push_back(Exact(n - j) - (p[n] - p[j]));
    table.tau0_exponents.push_back(Exact(j) - p[j]);
  }
  return table;
}

CoefficientTable coeff_C_recur(std::span<const Exact> alphas) {
  check_order(alphas.size());
  check_exponents(alphas);
  const int n = static_cast<int>(alphas.size());
  // Coefficients for the suffix a_{s+1}..a_n, starting from the last entry.
  std::vector<Exact> c = {Exact(1) / (Exact(1) - alphas[n - 1]),
                          Exact(-1) / (Exact(1) - alphas[n - 1])};
  for (int s = n - 2; s >= 0; --s) {
    const int m = n - s;  // order of the new table
    std::vector<Exact> next(m + 1);
    Exact window(0);
    for (int j = 0; j < m; ++j) {
      window += alphas[s + j];
      next[j + 1] = -c[j] / (Exact(j + 1) - window);
    }
    next[0] = 0;
    for (int j = 1; j <= m; ++j) next[0] -= next[j];
    c = std::move(next);
  }
  const std::vector<Exact> p = prefix_sums(alphas);
  CoefficientTable table;
  table.c = std::move(c);
  for (int j = 0; j <= n; ++j) {
    table.t_exponents.push_back(Exact(n - j) - (p[n] - p[j]));
    table.tau0_exponents.push_back(Exact(j) - p[j]);
  }
  return table;
}

CoefficientTable coeff_D(std::span<const Exact> tail) {
  std::vector<Exact> full(1, Exact(0));
  full.insert(full.end(), tail.begin(), tail.end());
  check_exponents(full);
  const int n = static_cast<int>(tail.size()) + 1;
  CoefficientTable table;
  if (n == 1) {
    // J_1 = T - τ0.
    table.c = {Exact(1), Exact(-1)};
    table.t_exponents = {Exact(1), Exact(0)};
    table.tau0_exponents = {Exact(0), Exact(1)};
    return table;
  }
  // q[k] = a_2 + ... + a_{k+1}
  const std::vector<Exact> q = prefix_sums(tail);
  const CoefficientTable shifted = coeff_C_closed(tail);  // (C^{n-1}_j)'
  table.c.resize(n + 1);
  table.t_exponents.resize(n + 1);
  table.tau0_exponents.resize(n + 1);

  table.c[0] = shifted.c[0];
  for (int j = 1; j <= n - 1; ++j) table.c[0] += shifted.c[j] / (Exact(j + 1) - q[j]);
  table.t_exponents[0] = Exact(n) - q[n - 1];
  table.tau0_exponents[0] = 0;

  table.c[1] = -shifted.c[0];
  table.t_exponents[1] = Exact(n - 1) - q[n - 1];
  table.tau0_exponents[1] = 1;

  for (int j = 2; j <= n; ++j) {
    table.c[j] = -shifted.c[j - 1] / (Exact(j) - q[j - 1]);
    table.t_exponents[j] = Exact(n - j) - (q[n - 1] - q[j - 1]);
    table.tau0_exponents[j] = Exact(j) - q[j - 1];
  }
  return table;
}

HighReal evaluate(const CoefficientTable& table, const HighReal& tau0, const HighReal& t) {
  HighReal sum = 0;
  for (std::size_t j = 0; j < table.c.size(); ++j) {
    sum += to_high(table.c[j]) * mp::pow(t, to_high(table.t_exponents[j])) *
           mp::pow(tau0, to_high(table.tau0_exponents[j]));
  }
  return sum;
}

double integral_I(double tau0, double t, std::span<const Exact> alphas) {
  check_interval(tau0, t);
  return static_cast<double>(evaluate(coeff_C_closed(alphas), HighReal(tau0), HighReal(t)));
}

double integral_J(double tau0, double t, std::span<const Exact> tail) {
  check_interval(tau0, t);
  return static_cast<double>(evaluate(coeff_D(tail), HighReal(tau0), HighReal(t)));
}

const char* to_string(Regime r) {
  return r == Regime::kGrowsWithT ? "grows-with-T" : "tail-decays";
}

const ThetaTerm& ThetaForm::term(std::uint32_t subset) const {
  auto it = std::lower_bound(terms.begin(), terms.end(), subset,
                             [](const ThetaTerm& t, std::uint32_t s) { return t.subset < s; });
  if (it == terms.end() || it->subset != subset) {
    throw ArgumentError("no theta term for subset " + std::to_string(subset));
  }
  return *it;
}

std::vector<std::uint32_t> ThetaForm::dominant_subsets() const {
  std::uint32_t full = 0;
  for (const auto& t : terms) full |= t.subset;
  std::vector<std::uint32_t> out;
  for (const auto& t : terms)
    if (t.subset != full && t.t_exponent == dominant_t_exponent) out.push_back(t.subset);
  return out;
}

namespace {

void check_closed_form_input(const RootedExtension& ext, const Alpha& alpha) {
  if (ext.ext_size() < 1) throw ArgumentError("extension must have at least one vertex");
  if (ext.ext_size() > kMaxClosedFormOrder) {
    throw ArgumentError("ext_size above " + std::to_string(kMaxClosedFormOrder) +
                        " is too many orderings");
  }
  if (classify(ext, alpha).is_degenerate) {
    throw DegeneracyError("extension is degenerate at alpha=" + alpha.to_string());
  }
}

// The first j entries of `order` placed; edges from order[j] back to the
// root and to earlier entries.
std::vector<int> back_edges(const RootedExtension& ext, const std::vector<int>& order) {
  std::vector<int> out;
  std::uint32_t placed = 0;
  for (int v : order) {
    out.push_back(std::popcount(ext.root_adjacency(v)) +
                  std::popcount(ext.ext_adjacency(v) & placed));
    placed |= 1u << v;
  }
  return out;
}

}  // namespace

ClosedFormExpectation expected_count_closed(const RootedExtension& ext, const Alpha& alpha,
                                            double tau0, double t) {
  check_closed_form_input(ext, alpha);
  check_interval(tau0, t);
  const int n = ext.ext_size();
  const SubsetPredims table(ext, alpha);
  const Exact den(alpha.den());
  auto exact_of = [&](std::int64_t scaled) { return Exact(scaled) / den; };

  std::map<std::uint32_t, ThetaTerm> grouped;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  do {
    const std::vector<int> e = back_edges(ext, order);
    const std::vector<Exact> a = exponent_vector(alpha, e);
    const CoefficientTable coeffs =
        ext.root_size() == 0 ? coeff_D(std::span<const Exact>(a).subspan(1)) : coeff_C_closed(a);
    std::uint32_t prefix = 0;
    for (int j = 0; j <= n; ++j) {
      if (j > 0) prefix |= 1u << order[j - 1];
      auto [it, fresh] = grouped.try_emplace(prefix);
      ThetaTerm& term = it->second;
      if (fresh) {
        term.subset = prefix;
        term.coefficient = 0;
        term.t_exponent = exact_of(table.scaled(table.full()) - table.scaled(prefix));
        term.tau0_exponent = exact_of(table.scaled(prefix));
      }
      if (term.t_exponent != coeffs.t_exponents[j] ||
          term.tau0_exponent != coeffs.tau0_exponents[j]) {
        throw std::logic_error("theta exponent bookkeeping mismatch");
      }
      term.coefficient += coeffs.c[j];
    }
  } while (std::next_permutation(order.begin(), order.end()));

  ClosedFormExpectation out;
  for (auto& [mask, term] : grouped) out.theta.terms.push_back(std::move(term));
  ExtensionClass cls = classify(ext, alpha);
  out.theta.regime = cls.is_rigid ? Regime::kTailDecays : Regime::kGrowsWithT;
  out.theta.dominant_t_exponent = exact_of(table.scaled_d());

  HighReal sum = 0;
  const HighReal lo(tau0), hi(t);
  for (const auto& term : out.theta.terms) {
    sum += to_high(term.coefficient) * mp::pow(hi, to_high(term.t_exponent)) *
           mp::pow(lo, to_high(term.tau0_exponent));
  }
  out.value = static_cast<double>(sum);
  return out;
}

HighReal exact_expectation_oracle_hp(const RootedExtension& ext, const Alpha& alpha,
                                     std::uint64_t tau0, std::uint64_t t) {
  const int n = ext.ext_size();
  const int r = ext.root_size();
  if (n < 1) throw ArgumentError("extension must have at least one vertex");
  if (tau0 < static_cast<std::uint64_t>(r)) {
    throw ArgumentError("tau0 must be at least root_size so the root fits in G(tau0)");
  }
  if (t < tau0) throw ArgumentError("T must be at least tau0");
  if (n > 6) throw InfeasibleError("oracle limited to 6 extension vertices");
  std::uint64_t orderings = 1;
  for (int i = 2; i <= n; ++i) orderings *= static_cast<std::uint64_t>(i);
  const std::uint64_t span = t - tau0;
  if (span > kOracleBudget || orderings * n * span > kOracleBudget) {
    throw InfeasibleError("oracle work " + std::to_string(orderings) + "*" +
                          std::to_string(n) + "*" + std::to_string(span) +
                          " exceeds budget " + std::to_string(kOracleBudget));
  }
  if (span < static_cast<std::uint64_t>(n)) return HighReal(0);

  // p[k], q[k] for arrival time tau0 + 1 + k.
  const HighReal a = HighReal(alpha.num()) / HighReal(alpha.den());
  std::vector<HighReal> p(span), q(span);
  for (std::uint64_t k = 0; k < span; ++k) {
    HighReal tau(tau0 + 1 + k);
    p[k] = mp::exp(-a * mp::log(tau));
    q[k] = 1 - p[k];
  }
  auto weight = [&](std::uint64_t k, int edges, int non_edges) {
    HighReal w = 1;
    if (edges > 0) w *= mp::pow(p[k], edges);
    if (non_edges > 0) w *= mp::pow(q[k], non_edges);
    return w;
  };

  HighReal total = 0;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<HighReal> f(span), next(span);
  do {
    const std::vector<int> e = back_edges(ext, order);
    // f[k]: weight of placing the first i vertices with the i-th at time k.
    for (std::uint64_t k = 0; k < span; ++k) f[k] = weight(k, e[0], r - e[0]);
    for (int i = 1; i < n; ++i) {
      HighReal running = 0;
      for (std::uint64_t k = 0; k < span; ++k) {
        next[k] = running == 0 ? HighReal(0) : running * weight(k, e[i], r + i - e[i]);
        running += f[k];
      }
      std::swap(f, next);
    }
    for (const auto& x : f) total += x;
  } while (std::next_permutation(order.begin(), order.end()));
  return total;
}

double exact_expectation_oracle(const RootedExtension& ext, const Alpha& alpha,
                                std::uint64_t tau0, std::uint64_t t) {
  return static_cast<double>(exact_expectation_oracle_hp(ext, alpha, tau0, t));
}

AsymptoticExponent asymptotic_exponent(const RootedExtension& ext, const Alpha& alpha) {
  if (ext.ext_size() < 1) throw ArgumentError("extension must have at least one vertex");
  ExtensionClass cls = classify(ext, alpha);
  if (cls.is_degenerate) {
    throw DegeneracyError("extension is degenerate at alpha=" + alpha.to_string());
  }
  if (cls.is_rigid) return {Regime::kTailDecays, delta(ext, alpha).value};
  return {Regime::kGrowsWithT, d_value(ext, alpha).value};
}

}  // namespace sparse_evolve
