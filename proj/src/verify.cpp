#include "bianchi/verify.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "bianchi/bounds.hpp"
#include "bianchi/eisenstein.hpp"
#include "bianchi/error.hpp"
#include "bianchi/exactmath.hpp"
#include "bianchi/finitering.hpp"
#include "bianchi/lefschetz.hpp"
#include "bianchi/oracles.hpp"
#include "bianchi/quadfield.hpp"
#include "bianchi/sczech.hpp"

namespace bianchi {

namespace {

// Counts comparisons and keeps the first mismatch for the report.
class Tally {
 public:
  explicit Tally(std::string name, bool hard = true) : name_(std::move(name)), hard_(hard) {}

  void expect(bool ok, const std::string& what) {
    ++total_;
    if (ok) return;
    ++failed_;
    if (first_.empty()) first_ = what;
  }

  template <class F>
  void guarded(const std::string& what, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      expect(false, what + ": " + e.what());
    }
  }

  Check check() const {
    std::ostringstream detail;
    detail << (total_ - failed_) << "/" << total_ << " agree";
    if (failed_ > 0) detail << "; first mismatch: " << first_;
    return {name_, failed_ == 0 && total_ > 0, hard_, detail.str()};
  }

 private:
  std::string name_;
  bool hard_;
  std::size_t total_ = 0;
  std::size_t failed_ = 0;
  std::string first_;
};

std::string str(const BigInt& v) { return to_string(v); }
std::string str(std::int64_t v) { return std::to_string(v); }

std::vector<std::int64_t> odd_primes_below(std::int64_t bound) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 3; p < bound; p += 2) {
    if (is_prime(BigInt(p))) out.push_back(p);
  }
  return out;
}

const std::vector<std::int64_t> kAnchorFields = {-2, -5, -7, -11};

SuiteResult symbols() {
  SuiteResult out{"symbols", {}};

  Tally fac("factorize vs trial division");
  for (std::int64_t n = 1; n <= 3000; ++n) fac.expect(factorize(BigInt(n)) == oracle::factorize_trial(n), str(n));
  fac.expect(factorize(BigInt(9999)) == oracle::factorize_trial(9999), "9999");
  out.checks.push_back(fac.check());

  Tally leg("legendre vs exhaustive squares");
  Tally kro("kronecker == legendre at odd primes");
  for (std::int64_t p : odd_primes_below(100)) {
    for (std::int64_t a = -200; a <= 200; ++a) {
      const int l = legendre(BigInt(a), BigInt(p));
      leg.expect(l == oracle::legendre_by_squares(a, p), "(" + str(a) + "|" + str(p) + ")");
      kro.expect(l == kronecker(BigInt(a), BigInt(p)), "(" + str(a) + "|" + str(p) + ")");
    }
  }
  out.checks.push_back(leg.check());
  out.checks.push_back(kro.check());

  Tally hil("hilbert2 vs mod-512 norm search");
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (std::int64_t a = -15; a <= 15; a += 2) {
    for (std::int64_t b = -15; b <= 15; b += 2) pairs.emplace_back(a, b);
    for (std::int64_t e : {2, -2, 6, -6, 10, -10}) {
      pairs.emplace_back(a, e);
      pairs.emplace_back(e, a);
    }
  }
  for (auto [a, b] : pairs) {
    hil.expect(hilbert2(BigInt(a), BigInt(b)) == oracle::hilbert2_by_search(a, b),
               "(" + str(a) + "," + str(b) + ")_2");
  }
  out.checks.push_back(hil.check());

  Tally sym("hilbert2 symmetric and bimultiplicative");
  std::vector<std::int64_t> sf;
  for (std::int64_t a = -50; a <= 50; ++a) {
    if (a != 0 && is_squarefree(a)) sf.push_back(a);
  }
  std::map<std::pair<std::int64_t, std::int64_t>, int> h;
  for (std::int64_t a : sf) {
    for (std::int64_t b : sf) h[{a, b}] = hilbert2(BigInt(a), BigInt(b));
  }
  for (std::int64_t a : sf) {
    for (std::int64_t b : sf) {
      sym.expect(h[{a, b}] == h[{b, a}], "symmetry (" + str(a) + "," + str(b) + ")");
    }
  }
  for (std::int64_t a1 : sf) {
    for (std::int64_t a2 : sf) {
      for (std::int64_t b : sf) {
        sym.expect(hilbert2(BigInt(a1 * a2), BigInt(b)) == h[{a1, b}] * h[{a2, b}],
                   "(" + str(a1) + "*" + str(a2) + "," + str(b) + ")");
      }
    }
  }
  out.checks.push_back(sym.check());

  Tally phi("euler_phi vs unit count");
  for (std::int64_t n = 1; n <= 500; ++n) {
    phi.expect(euler_phi(BigInt(n)) == oracle::phi_by_count(n), "phi(" + str(n) + ")");
  }
  out.checks.push_back(phi.check());

  Tally spt("sym_power_trace vs eigenvalue sum");
  for (std::int64_t t = -2; t <= 2; ++t) {
    for (long k = 0; k <= 10; ++k) {
      spt.expect(sym_power_trace(BigInt(t), k) == oracle::sym_power_trace_by_eigenvalues(t, k),
                 "t=" + str(t) + " k=" + std::to_string(k));
    }
  }
  for (auto [t, order] : {std::pair<std::int64_t, long>{-1, 3}, {0, 4}, {1, 6}}) {
    for (long k = 0; k + order <= 48; ++k) {
      spt.expect(sym_power_trace(BigInt(t), k) == sym_power_trace(BigInt(t), k + order),
                 "period " + std::to_string(order) + " at k=" + std::to_string(k));
    }
  }
  out.checks.push_back(spt.check());

  Tally split("splitting_type vs roots of the minimal polynomial");
  for (std::int64_t d = -2; d >= -30; --d) {
    if (d == -3 || !is_squarefree(d)) continue;
    const QuadField field = make_field(d);
    for (std::int64_t p = 2; p <= 50; ++p) {
      if (!is_prime(BigInt(p))) continue;
      split.expect(splitting_type(field, p) == oracle::splitting_type_by_roots(field, p),
                   "d=" + str(d) + " p=" + str(p));
    }
  }
  out.checks.push_back(split.check());
  return out;
}

SuiteResult classgroup() {
  SuiteResult out{"classgroup", {}};
  Tally known("class numbers of d = -2, -5, -7, -11, -23");
  const std::map<std::int64_t, std::int64_t> table = {{-2, 1}, {-5, 2}, {-7, 1}, {-11, 1}, {-23, 3}};
  for (auto [d, h] : table) {
    known.expect(make_field(d).class_number() == h, "h(" + str(d) + ")");
  }
  out.checks.push_back(known.check());

  Tally ideals("reduced forms vs ideal classes below the Minkowski bound");
  for (std::int64_t d : squarefree_discriminants(-100, -2)) {
    const QuadField field = make_field(d);
    ideals.expect(field.class_number() == oracle::class_number_by_ideals(field), "h(" + str(d) + ")");
  }
  out.checks.push_back(ideals.check());

  Tally genus("ambiguous reduced forms == 2^(t-1)");
  for (std::int64_t d : squarefree_discriminants(-200, -2)) {
    const QuadField field = make_field(d);
    std::int64_t ambiguous = 0;
    for (const auto& f : reduced_forms(field.discriminant())) ambiguous += f.ambiguous() ? 1 : 0;
    genus.expect(ambiguous == two_torsion_count(field), "d=" + str(d));
  }
  out.checks.push_back(genus.check());
  return out;
}

SuiteResult cusps() {
  SuiteResult out{"cusps", {}};
  Tally count("cusp_count vs h*#SL2(O/N)/N^2 by enumeration");
  Tally boundary("boundary dims (c, 2c, c)");
  for (std::int64_t d : kAnchorFields) {
    const QuadField field = make_field(d);
    for (std::int64_t N : {3, 4, 5}) {
      count.guarded("d=" + str(d) + " N=" + str(N), [&] {
        count.expect(cusp_count(field, N) == cusp_count_bruteforce(field, N),
                     "d=" + str(d) + " N=" + str(N));
      });
      const auto dims = boundary_dims(field, N, 0);
      boundary.expect(dims.h1 == dims.h0 + dims.h2 && dims.h0 == cusp_count(field, N),
                      "d=" + str(d) + " N=" + str(N));
    }
  }
  out.checks.push_back(count.check());
  out.checks.push_back(boundary.check());

  Tally orders("#SL2(O/3): 576 (d=-2), 720 (d=-7)");
  orders.expect(sl2_order_exhaustive(FiniteRing(make_field(-2), 3)) == 576, "d=-2");
  orders.expect(sl2_order_exhaustive(FiniteRing(make_field(-7), 3)) == 720, "d=-7");
  orders.expect(sl2_order_exhaustive(FiniteRing(make_field(-2), 2)) ==
                    sl2_order_formula(make_field(-2), 2),
                "d=-2 N=2");
  out.checks.push_back(orders.check());

  Tally classical("chi(Gamma_N) = chi(X_N) - cusps for N in [3,60]");
  for (std::int64_t N = 3; N <= 60; ++N) {
    const auto inv = classical_gamma_invariants(N);
    classical.expect(inv.chi_group == inv.chi_compact - BigRat(inv.cusps), "N=" + str(N));
  }
  out.checks.push_back(classical.check());
  return out;
}

SuiteResult fixedpoints() {
  SuiteResult out{"fixedpoints", {}};
  Tally sigma("sigma coset census == p^(2n) - p^(2n-2)");
  Tally tau("tau coset census vs p^(2n-1) - p^(2n-2)", false);
  Tally line("#P^1(O/p^n) == Np^n + Np^(n-1)");
  for (std::int64_t d : {-2, -7}) {
    const QuadField field = make_field(d);
    for (auto [p, n] : {std::pair<std::int64_t, unsigned>{3, 1}, {3, 2}, {5, 1}}) {
      const FiniteRing ring(field, static_cast<std::int64_t>(ipow(BigInt(p), n)));
      const std::string where = "d=" + str(d) + " p=" + str(p) + " n=" + std::to_string(n);
      const auto s = fixed_coset_count(ring, Involution::sigma);
      sigma.expect(s.match(), where + ": census " + str(s.census) + ", formula " + str(s.formula));
      const auto t = fixed_coset_count(ring, Involution::tau);
      tau.expect(t.match(), where + ": census " + str(t.census) + ", formula " + str(t.formula));

      BigInt expected = 0;
      for (const auto& ideal : primes_above(field, p)) {
        const BigInt q = ideal.norm;
        BigInt factor = ipow(q, n) + ipow(q, n - 1);
        expected = expected == 0 ? factor : expected * factor;
      }
      line.expect(BigInt(projective_line(ring).size()) == expected, where);
    }
  }
  out.checks.push_back(sigma.check());
  out.checks.push_back(tau.check());
  out.checks.push_back(line.check());

  Tally invol("sigma and tau are involutions on SL2(R)");
  for (auto [d, N] : {std::pair<std::int64_t, std::int64_t>{-2, 3}, {-7, 3}, {-2, 5}}) {
    const FiniteRing ring(make_field(d), N);
    for (const auto& m : sl2_elements(ring)) {
      for (Involution inv : {Involution::sigma, Involution::tau}) {
        const Mat2 image = apply(ring, inv, m);
        invol.expect(apply(ring, inv, image) == m && ring.det(image) == ring.one(),
                     "d=" + str(d) + " N=" + str(N));
      }
    }
  }
  out.checks.push_back(invol.check());

  Tally magnitude("|tr H^2_Eis| <= dim H^2_Eis for k > 0");
  for (std::int64_t d : kAnchorFields) {
    const QuadField field = make_field(d);
    for (std::int64_t N : {3, 5, 7, 9}) {
      if (field.is_ramified(static_cast<std::int64_t>(factorize(BigInt(N))[0].prime))) continue;
      for (long k : {1, 2}) {
        const BigInt c = eis_dim(field, N, k);
        const BigInt s = trace_sigma_h2_eis(field, N, k);
        const BigInt t = trace_tau_h2_eis(field, N, k);
        magnitude.expect(-c <= s && s <= c && -c <= t && t <= c, "d=" + str(d) + " N=" + str(N));
      }
    }
  }
  out.checks.push_back(magnitude.check());
  return out;
}

SuiteResult sczech() {
  SuiteResult out{"sczech", {}};
  const std::vector<std::pair<std::int64_t, std::int64_t>> grid = {{-2, 2}, {-2, 3}, {-2, 4},
                                                                   {-2, 5}, {-7, 2}, {-7, 3}};
  const auto results = adjudicate_characters(grid);
  bool any_periodic = false;
  Tally imag("Im(trace) < 1e-9 for constructible variants");
  for (const auto& r : results) {
    any_periodic = any_periodic || r.o_periodic;
    const bool chosen = r.variant == kDefaultCharacter;
    std::ostringstream detail;
    detail << "O-periodic " << (r.o_periodic ? "yes" : "no") << ", class function "
           << (r.class_function ? "yes" : "no");
    for (const auto& row : r.rows) {
      if (!row.constructed) continue;
      detail << "; (" << row.d << "," << row.N << ") trace err " << row.trace_error << " |M^2-I| "
             << row.involution_defect;
      imag.expect(std::abs(row.imag) < 1e-9, std::string(to_string(r.variant)));
    }
    out.checks.push_back({"character " + std::string(to_string(r.variant)) +
                              (chosen ? " (default)" : ""),
                          r.passes(kSczechTraceTolerance, kSczechInvolutionTolerance), chosen,
                          detail.str()});
  }
  out.checks.push_back({"some character variant is O-periodic", any_periodic, true, ""});
  out.checks.push_back(imag.check());

  Tally h1("sczech trace(-2, 5) == -(5^2 + 1)");
  const QuadField field = make_field(-2);
  const auto tr = sczech_trace(field, 5);
  const double expected = static_cast<double>(trace_sigma_h1_eis(field, 5, 1));
  h1.expect(std::abs(tr.real - expected) < kSczechTraceTolerance, std::to_string(tr.real));
  out.checks.push_back(h1.check());
  return out;
}

SuiteResult integrality() {
  SuiteResult out{"integrality", {}};
  Tally paths("principal level == prime-power closed form");
  for (std::int64_t d : kAnchorFields) {
    const QuadField field = make_field(d);
    for (std::int64_t p : {3, 5, 7}) {
      if (field.is_ramified(p)) continue;
      for (unsigned n : {1u, 2u}) {
        const auto N = static_cast<std::int64_t>(ipow(BigInt(p), n));
        for (long k = 0; k <= 5; ++k) {
          const std::string where =
              "d=" + str(d) + " N=" + str(N) + " k=" + std::to_string(k);
          paths.guarded(where, [&] {
            paths.expect(lefschetz_sigma_principal(field, make_level(field, N), k) ==
                             lefschetz_sigma_prime_power(field, p, n, k),
                         where);
          });
        }
      }
    }
  }
  out.checks.push_back(paths.check());

  Tally integral("L(sigma, Gamma(N)) integral for prime powers N in [3,40]");
  Tally linear("L(sigma, Gamma(N))/(k+1) constant in k");
  for (std::int64_t d : kAnchorFields) {
    const QuadField field = make_field(d);
    for (std::int64_t N = 3; N <= 40; ++N) {
      if (factorize(BigInt(N)).size() != 1) continue;
      const std::string where = "d=" + str(d) + " N=" + str(N);
      integral.guarded(where, [&] {
        const Level level = make_level(field, N);
        const BigInt L0 = lefschetz_sigma_principal(field, level, 0);
        integral.expect(true, where);
        for (long k = 1; k <= 5; ++k) {
          linear.expect(lefschetz_sigma_principal(field, level, k) == L0 * (k + 1), where);
        }
      });
    }
  }
  out.checks.push_back(integral.check());
  out.checks.push_back(linear.check());

  const auto adjudication = adjudicate_brackets(kAnchorFields, 24);
  for (const auto& v : adjudication.variants) {
    const bool chosen = v.variant == kDefaultBracket;
    std::ostringstream detail;
    detail << v.integrality_failures.size() << " integrality failures, "
           << v.parity_violations.size() << " parity violations, " << v.anchor_failures.size()
           << " anchor failures; even k " << (v.passes_even_k() ? "pass" : "fail") << ", odd k "
           << (v.passes_odd_k() ? "pass" : "fail");
    out.checks.push_back({"bracket " + std::string(to_string(v.variant)) +
                              (chosen ? " (default) even k" : ""),
                          chosen ? v.passes_even_k() : v.passes_all(), chosen, detail.str()});
  }
  const bool rational_flagged =
      !adjudication.result(BracketVariant::rational).integrality_failures.empty();
  out.checks.push_back(
      {"rational bracket reading fails integrality somewhere", rational_flagged, true, ""});

  Tally gl2("GL2 trace integral at even k (default bracket)");
  Tally gl2_odd("GL2 trace integral at odd k (default bracket)", false);
  for (std::int64_t d : kAnchorFields) {
    const QuadField field = make_field(d);
    for (long k = 0; k <= 24; ++k) {
      const auto tr = gl2_trace_sigma1(field, k);
      (k % 2 == 0 ? gl2 : gl2_odd)
          .expect(tr.integral, "d=" + str(d) + " k=" + std::to_string(k) + ": " + to_string(tr.value));
    }
  }
  out.checks.push_back(gl2.check());
  out.checks.push_back(gl2_odd.check());

  Tally bounds("exact bounds at d=-2, N=5^n, k=0: 12, 1251, 156251");
  const QuadField field = make_field(-2);
  const std::pair<std::int64_t, std::int64_t> expected[] = {{5, 12}, {25, 1251}, {125, 156251}};
  for (auto [N, value] : expected) {
    bounds.guarded("N=" + str(N), [&] {
      const auto r = cusp_lower_bound(field, N, 0);
      bounds.expect(r.mode == BoundMode::exact && r.bound == value,
                    "N=" + str(N) + ": " + str(r.bound));
    });
  }
  out.checks.push_back(bounds.check());
  return out;
}

SuiteResult anchors() {
  SuiteResult out{"anchors", {}};
  for (BracketVariant variant : kAllBracketVariants) {
    const bool chosen = variant == kDefaultBracket;
    Tally t("k=0 anchors L(sigma) = 2+h-2^(t-1), L(tau) = 2-h-2^(t-1), bracket " +
                std::string(to_string(variant)) + (chosen ? " (default)" : ""),
            chosen);
    for (std::int64_t d : kAnchorFields) {
      const QuadField field = make_field(d);
      const BigRat h = field.class_number();
      const BigRat genus = two_torsion_count(field);
      const auto s = lefschetz_level_one(field, Involution::sigma, 0, variant);
      const auto u = lefschetz_level_one(field, Involution::tau, 0, variant);
      t.expect(s.value == 2 + h - genus, "L(sigma, d=" + str(d) + ") = " + to_string(s.value));
      t.expect(u.value == 2 - h - genus, "L(tau, d=" + str(d) + ") = " + to_string(u.value));
    }
    out.checks.push_back(t.check());
  }

  Tally level_one("level-one traces agree with the H^2 formula at N = 1");
  for (std::int64_t d : kAnchorFields) {
    const QuadField field = make_field(d);
    const auto traces = level_one_sigma_traces(field, 0);
    level_one.expect(traces.tr2.value() == trace_sigma_h2_eis(field, 1, 0), "d=" + str(d));
    level_one.expect(traces.tr1.value() == -field.class_number(), "d=" + str(d));
  }
  out.checks.push_back(level_one.check());
  return out;
}

}  // namespace

bool SuiteResult::hard_failure() const {
  for (const auto& c : checks) {
    if (c.hard && !c.passed) return true;
  }
  return false;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"symbols",     "classgroup",  "cusps",  "fixedpoints",
                                                 "sczech",      "integrality", "anchors"};
  return names;
}

SuiteResult run_suite(std::string_view name) {
  static const std::map<std::string, std::function<SuiteResult()>, std::less<>> suites = {
      {"symbols", symbols},     {"classgroup", classgroup},   {"cusps", cusps},
      {"fixedpoints", fixedpoints}, {"sczech", sczech}, {"integrality", integrality},
      {"anchors", anchors}};
  const auto it = suites.find(name);
  require(it != suites.end(), "verify: unknown suite '" + std::string(name) + "'");
  return it->second();
}

}  // namespace bianchi
