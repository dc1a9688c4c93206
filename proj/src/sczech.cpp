#include "bianchi/sczech.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <string>

#include <Eigen/Dense>

#include "bianchi/error.hpp"

namespace bianchi {

namespace {

struct OElem {
  std::int64_t a = 0, b = 0;
};

OElem o_mul(const QuadField& f, OElem x, OElem y) {
  const auto& w = f.omega();
  return {x.a * y.a - x.b * y.b * w.norm, x.a * y.b + x.b * y.a + x.b * y.b * w.trace};
}

OElem o_conj(const QuadField& f, OElem x) { return {x.a + x.b * f.omega().trace, -x.b}; }

OElem o_sub(OElem x, OElem y) { return {x.a - y.a, x.b - y.b}; }

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

bool symplectic(CharacterVariant v) {
  return v == CharacterVariant::symplectic_invdiff || v == CharacterVariant::symplectic_level;
}

std::complex<double> unit_phase(std::int64_t numerator, std::int64_t denominator) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(mod(numerator, denominator)) /
                       static_cast<double>(denominator);
  return {std::cos(angle), std::sin(angle)};
}

// φ(z) for z whose ω-coefficient is y_num / y_den. (z − z̄)/√D equals that
// ω-coefficient and (z − z̄)/D equals −i times it over √|D|.
std::complex<double> character(const QuadField& f, std::int64_t N, CharacterVariant v,
                               std::int64_t y_num, std::int64_t y_den) {
  switch (v) {
    case CharacterVariant::literal_d: {
      const double y = static_cast<double>(y_num) / static_cast<double>(y_den);
      const double root = std::sqrt(static_cast<double>(-f.discriminant()));
      return {std::exp(2.0 * std::numbers::pi * y / root), 0.0};
    }
    case CharacterVariant::inverse_different:
    case CharacterVariant::symplectic_invdiff:
      return unit_phase(y_num, y_den);
    case CharacterVariant::symplectic_level:
      return unit_phase(y_num * N, y_den);
  }
  return {};
}

// Pairing on numerators: s = s_num/N etc., possibly unreduced.
std::complex<double> pairing_raw(const QuadField& f, std::int64_t N, CharacterVariant v,
                                 OElem s, OElem t, OElem u, OElem w) {
  OElem z;
  if (symplectic(v)) {
    z = o_sub(o_mul(f, s, w), o_mul(f, t, u));
  } else {
    z = o_sub(o_mul(f, s, o_conj(f, w)), o_mul(f, t, o_conj(f, u)));
  }
  return character(f, N, v, z.b, N * N);
}

std::vector<SczechIndex> nonzero_indices(std::int64_t N) {
  std::vector<SczechIndex> out;
  for (std::int64_t a1 = 0; a1 < N; ++a1)
    for (std::int64_t b1 = 0; b1 < N; ++b1)
      for (std::int64_t a2 = 0; a2 < N; ++a2)
        for (std::int64_t b2 = 0; b2 < N; ++b2) {
          if (a1 == 0 && b1 == 0 && a2 == 0 && b2 == 0) continue;
          out.push_back({a1, b1, a2, b2});
        }
  return out;
}

}  // namespace

std::string_view to_string(CharacterVariant variant) {
  switch (variant) {
    case CharacterVariant::literal_d: return "literal-D";
    case CharacterVariant::inverse_different: return "inverse-different";
    case CharacterVariant::symplectic_invdiff: return "symplectic-invdiff";
    case CharacterVariant::symplectic_level: return "symplectic-level";
  }
  return "?";
}

std::optional<CharacterVariant> parse_character(std::string_view name) {
  for (auto v : kAllCharacterVariants) {
    if (to_string(v) == name) return v;
  }
  return std::nullopt;
}

bool character_is_o_periodic(const QuadField& field, CharacterVariant variant) {
  constexpr double tol = 1e-12;
  // φ(0), φ(1) and φ(ω); φ is additive in z, so the generators decide it
  for (std::int64_t y : {0, 0, 1}) {
    if (std::abs(character(field, 1, variant, y, 1) - 1.0) > tol) return false;
  }
  return true;
}

bool character_is_class_function(const QuadField& field, std::int64_t N, CharacterVariant variant) {
  constexpr double tol = 1e-12;
  const auto indices = nonzero_indices(N);
  const OElem shifts[] = {{N, 0}, {0, N}};
  for (const auto& st : indices) {
    for (const auto& uv : indices) {
      const OElem s{st.a1, st.b1}, t{st.a2, st.b2}, u{uv.a1, uv.b1}, w{uv.a2, uv.b2};
      const auto base = pairing_raw(field, N, variant, s, t, u, w);
      for (const auto& g : shifts) {
        const OElem sg{s.a + g.a, s.b + g.b}, tg{t.a + g.a, t.b + g.b};
        const OElem ug{u.a + g.a, u.b + g.b}, wg{w.a + g.a, w.b + g.b};
        if (std::abs(pairing_raw(field, N, variant, sg, t, u, w) - base) > tol) return false;
        if (std::abs(pairing_raw(field, N, variant, s, tg, u, w) - base) > tol) return false;
        if (std::abs(pairing_raw(field, N, variant, s, t, ug, w) - base) > tol) return false;
        if (std::abs(pairing_raw(field, N, variant, s, t, u, wg) - base) > tol) return false;
      }
    }
  }
  return true;
}

std::complex<double> sczech_pairing(const QuadField& field, std::int64_t N, CharacterVariant variant,
                                    const SczechIndex& st, const SczechIndex& uv) {
  return pairing_raw(field, N, variant, {st.a1, st.b1}, {st.a2, st.b2}, {uv.a1, uv.b1},
                     {uv.a2, uv.b2});
}

SczechOperator sczech_operator(const QuadField& field, std::int64_t N, CharacterVariant variant) {
  require(N >= 2, "sczech_operator: N must be >= 2");
  const std::int64_t n2 = N * N;
  require(n2 * n2 - 1 <= kMaxSczechDimension,
          "sczech_operator: N^4 - 1 exceeds " + std::to_string(kMaxSczechDimension));
  require(character_is_o_periodic(field, variant),
          "sczech_operator: character variant " + std::string(to_string(variant)) +
              " is not trivial on O, so it is ill-defined on classes mod O");

  SczechOperator op;
  op.n_ = N;
  op.variant_ = variant;
  op.index_ = nonzero_indices(N);
  const std::size_t dim = op.index_.size();
  op.data_.resize(dim * dim);
  const double eliminated = -1.0 / (static_cast<double>(n2) * static_cast<double>(n2 - 1));
  const double scale = 1.0 / static_cast<double>(n2);
  for (std::size_t row = 0; row < dim; ++row) {
    for (std::size_t col = 0; col < dim; ++col) {
      const auto phi = sczech_pairing(field, N, variant, op.index_[row], op.index_[col]);
      op.data_[row * dim + col] = eliminated - phi * scale;
    }
  }
  return op;
}

std::complex<double> SczechOperator::trace() const {
  std::complex<double> sum = 0;
  for (std::size_t i = 0; i < index_.size(); ++i) sum += entry(i, i);
  return sum;
}

double SczechOperator::involution_defect() const {
  using RowMajor = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const auto dim = static_cast<Eigen::Index>(index_.size());
  Eigen::Map<const RowMajor> m(data_.data(), dim, dim);
  RowMajor defect = m * m - RowMajor::Identity(dim, dim);
  return defect.cwiseAbs().rowwise().sum().maxCoeff();
}

void SczechOperator::dump(std::ostream& out) const {
  const auto old_precision = out.precision(17);
  for (std::size_t i = 0; i < index_.size(); ++i) {
    for (std::size_t j = 0; j < index_.size(); ++j) {
      const auto z = entry(i, j);
      out << i << ' ' << j << ' ' << z.real() << ' ' << z.imag() << '\n';
    }
  }
  out.precision(old_precision);
}

SczechTrace sczech_trace(const QuadField& field, std::int64_t N, CharacterVariant variant) {
  const auto tr = sczech_operator(field, N, variant).trace();
  return {tr.real(), tr.imag()};
}

bool CharacterAdjudication::passes(double trace_tol, double involution_tol) const {
  if (!o_periodic || rows.empty()) return false;
  for (const auto& row : rows) {
    if (!row.constructed || row.trace_error >= trace_tol || row.involution_defect >= involution_tol) {
      return false;
    }
  }
  return true;
}

std::vector<CharacterAdjudication> adjudicate_characters(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& grid) {
  std::vector<CharacterAdjudication> out;
  for (CharacterVariant variant : kAllCharacterVariants) {
    CharacterAdjudication result;
    result.variant = variant;
    result.o_periodic = true;
    result.class_function = true;
    for (const auto& [d, N] : grid) {
      const QuadField field = make_field(d);
      CharacterAdjudicationRow row;
      row.d = d;
      row.N = N;
      result.o_periodic = result.o_periodic && character_is_o_periodic(field, variant);
      result.class_function =
          result.class_function && character_is_class_function(field, N, variant);
      if (character_is_o_periodic(field, variant)) {
        const auto op = sczech_operator(field, N, variant);
        const auto tr = op.trace();
        row.constructed = true;
        row.trace_error = std::abs(tr.real() + static_cast<double>(N * N + 1));
        row.imag = tr.imag();
        row.involution_defect = op.involution_defect();
      }
      result.rows.push_back(row);
    }
    out.push_back(std::move(result));
  }
  return out;
}

}  // namespace bianchi
