#include "bianchi/bounds.hpp"

#include <string>

#include "bianchi/error.hpp"

namespace bianchi {

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

std::optional<std::pair<std::int64_t, unsigned>> single_inert_prime(const QuadField& field,
                                                                    std::int64_t N) {
  const auto fac = factorize(BigInt(N));
  if (fac.size() != 1) return std::nullopt;
  const auto p = static_cast<std::int64_t>(fac[0].prime);
  if (splitting_type(field, p) != SplittingType::inert) return std::nullopt;
  return std::make_pair(p, fac[0].exponent);
}

void finish(BoundReport& r) {
  const bool exact = r.tr0.is_exact() && r.tr1.is_exact() && r.tr2.is_exact();
  if (exact) {
    r.mode = BoundMode::exact;
    const BigInt sum = r.L + r.tr1.value() - r.tr2.value() - r.tr0.value();
    if (sum % 2 != 0) {
      throw ConformanceError("cusp_lower_bound: L + tr1 - tr2 - tr0 = " + to_string(sum) +
                             " is odd");
    }
    r.bound = abs_big(sum) / 2;
    return;
  }
  r.mode = BoundMode::worst_case;
  const BigInt excess = abs_big(r.L - r.tr2.value() - r.tr0.value()) - r.eis_dim;
  r.bound = excess <= 0 ? BigInt(0) : BigInt((excess + 1) / 2);
}

BoundReport level_one_bound(const QuadField& field, long k, Involution inv, BracketVariant bracket) {
  BoundReport r;
  r.d = field.d();
  r.N = 1;
  r.k = k;
  r.involution = inv;
  const auto lefschetz = lefschetz_level_one(field, inv, k, bracket);
  r.L = require_integer(lefschetz.value, "level-one Lefschetz number");
  r.provenance.push_back({"L", "level-one Lefschetz formula, bracket " +
                                   std::string(to_string(bracket))});
  if (k % 2 == 1) r.warnings.push_back("odd k: bracket reading unadjudicated");

  const LevelOneTraces sigma = level_one_sigma_traces(field, k);
  r.eis_dim = field.class_number();
  r.tr0 = sigma.tr0;
  if (inv == Involution::sigma) {
    r.tr1 = sigma.tr1;
    r.tr2 = sigma.tr2;
  } else {
    r.tr1 = sigma.tr1.is_exact()
                ? TraceValue::exact(-sigma.tr1.value(), "tr(tau) = -tr(sigma) on H^1_Eis")
                : TraceValue::interval(sigma.tr1.hi, "|tr| <= dim H^1_Eis = h(K)");
    r.tr2 = TraceValue::exact(trace_tau_h2_eis(field, 1, k), "tau on the boundary: genus count");
  }
  r.provenance.push_back({"tr0", r.tr0.source});
  r.provenance.push_back({"tr1", r.tr1.source});
  r.provenance.push_back({"tr2", r.tr2.source});
  finish(r);
  return r;
}

}  // namespace

std::string_view to_string(BoundMode mode) {
  return mode == BoundMode::exact ? "exact" : "worst_case";
}

BoundReport cusp_lower_bound(const QuadField& field, std::int64_t N, long k, Involution inv,
                             BracketVariant bracket) {
  require(k >= 0, "cusp_lower_bound: k must be >= 0");
  require(N == 1 || N >= 3, "cusp_lower_bound: N must be 1 or >= 3");
  if (N == 1) return level_one_bound(field, k, inv, bracket);
  require(inv == Involution::sigma,
          "cusp_lower_bound: no Lefschetz formula for tau at principal level N >= 3");

  BoundReport r;
  r.d = field.d();
  r.N = N;
  r.k = k;
  r.involution = inv;

  const Level level = make_level(field, N);
  r.L = lefschetz_sigma_principal(field, level, k);
  r.provenance.push_back({"L", "principal-level Lefschetz number (A + 2B) table"});
  if (!level.validated) r.warnings.push_back("composite level: Lefschetz constant unvalidated");
  if (level.non_integral_ab) {
    r.warnings.push_back("Rohlfs A = " + to_string(level.A) + ", B = " + to_string(level.B) +
                         " not integral individually; A + 2B = " +
                         to_string(level.A + 2 * level.B));
  }

  r.tr0 = k == 0 ? TraceValue::exact(1, "trivial action on H^0 of a connected space")
                 : TraceValue::exact(0, "E_{k,k} irreducible for k > 0");
  r.tr2 = TraceValue::exact(trace_sigma_h2_eis(field, N, k),
                            "boundary coset census, Kronecker delta at k = 0");
  r.eis_dim = cusp_count(field, N);

  const auto inert = single_inert_prime(field, N);
  if (k == 0 && field.class_number() == 1 && inert) {
    r.tr1 = TraceValue::exact(trace_sigma_h1_eis(field, inert->first, inert->second),
                              "Sczech cocycles, class number one and inert p");
  } else {
    r.tr1 = TraceValue::interval(r.eis_dim, "|tr| <= dim H^1_Eis = c(Gamma(N))");
  }
  r.provenance.push_back({"tr0", r.tr0.source});
  r.provenance.push_back({"tr1", r.tr1.source});
  r.provenance.push_back({"tr2", r.tr2.source});
  finish(r);
  return r;
}

Gl2Trace gl2_trace_sigma1(const QuadField& field, long k, BracketVariant variant) {
  require(k >= 0, "gl2_trace_sigma1: k must be >= 0");
  const auto sigma = lefschetz_level_one(field, Involution::sigma, k, variant);
  const auto tau = lefschetz_level_one(field, Involution::tau, k, variant);
  Gl2Trace out;
  out.k = k;
  out.variant = variant;
  const BigRat delta = k == 0 ? 4 : 0;
  out.value = -(tau.value + sigma.value + BigRat(BigInt(1) << field.t()) - delta) / 4;
  out.integral = is_integer(out.value);
  out.adjudicated = k % 2 == 0;
  return out;
}

BigInt gl2_lower_bound(const QuadField& field, long k, BracketVariant variant) {
  const Gl2Trace tr = gl2_trace_sigma1(field, k, variant);
  const BigInt value = require_integer(tr.value, "GL2 trace of sigma on H^1");
  return abs_big(value);
}

namespace {

void summarize(GrowthScan& scan) {
  scan.constant = true;
  scan.above_floor = !scan.rows.empty();
  for (std::size_t i = 0; i < scan.rows.size(); ++i) {
    const BigRat& r = scan.rows[i].ratio;
    if (i == 0 || r < scan.min_ratio) scan.min_ratio = r;
    if (i == 0 || r > scan.max_ratio) scan.max_ratio = r;
    if (r != scan.rows.front().ratio) scan.constant = false;
    if (scan.floor == 0 ? r <= 0 : r < scan.floor) scan.above_floor = false;
  }
}

}  // namespace

GrowthScan level_growth_scan(const QuadField& field, std::int64_t p, const std::vector<unsigned>& ns,
                             long k, BigRat floor) {
  GrowthScan scan;
  scan.parameter_name = "n";
  scan.quantity_name = "bound";
  scan.reference_name = "p^(3n)";
  scan.floor = floor;
  for (unsigned n : ns) {
    const BigInt N = ipow(BigInt(p), n);
    require(N <= BigInt(INT64_MAX), "level_growth_scan: level overflows int64");
    const auto report = cusp_lower_bound(field, static_cast<std::int64_t>(N), k);
    const BigInt ref = ipow(BigInt(p), 3 * n);
    scan.rows.push_back({static_cast<std::int64_t>(n), report.bound, ref, BigRat(report.bound, ref)});
  }
  summarize(scan);
  return scan;
}

GrowthScan weight_growth_scan(const QuadField& field, std::int64_t N, const std::vector<long>& ks) {
  GrowthScan scan;
  scan.parameter_name = "k";
  scan.quantity_name = "L";
  scan.reference_name = "k+1";
  const Level level = make_level(field, N);
  for (long k : ks) {
    const BigInt L = lefschetz_sigma_principal(field, level, k);
    scan.rows.push_back({k, L, BigInt(k + 1), BigRat(L, BigInt(k + 1))});
  }
  summarize(scan);
  scan.above_floor = false;
  return scan;
}

GrowthScan discriminant_growth_scan(const std::vector<std::int64_t>& ds, long k,
                                    BracketVariant bracket) {
  GrowthScan scan;
  scan.parameter_name = "d";
  scan.quantity_name = "bound";
  scan.reference_name = "phi(|D|)";
  for (std::int64_t d : ds) {
    const QuadField field = make_field(d);
    const auto report = cusp_lower_bound(field, 1, k, Involution::sigma, bracket);
    const BigInt ref = euler_phi(BigInt(-field.discriminant()));
    scan.rows.push_back({d, report.bound, ref, BigRat(report.bound, ref)});
  }
  summarize(scan);
  return scan;
}

std::vector<std::int64_t> squarefree_discriminants(std::int64_t lo, std::int64_t hi) {
  require(lo <= hi && hi < 0, "squarefree_discriminants: need lo <= hi < 0");
  std::vector<std::int64_t> out;
  for (std::int64_t d = hi; d >= lo; --d) {
    if (d == -1 || d == -3 || !is_squarefree(d)) continue;
    out.push_back(d);
  }
  return out;
}

}  // namespace bianchi
