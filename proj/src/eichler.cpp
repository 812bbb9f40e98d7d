#include "metacomm/eichler.hpp"

#include <charconv>

namespace metacomm {

std::string IdealLabel::to_string() const {
  switch (side) {
    case Side::S1: return "S1(" + std::to_string(s) + ")";
    case Side::S2: return "S2(" + std::to_string(s) + ")";
    case Side::Rad: return "Rad";
  }
  return "?";
}

IdealLabel IdealLabel::parse(const std::string& text) {
  if (text == "Rad") return rad();
  if (text.size() >= 5 && (text.starts_with("S1(") || text.starts_with("S2(")) &&
      text.back() == ')') {
    std::uint64_t s = 0;
    const char* first = text.data() + 3;
    const char* last = text.data() + text.size() - 1;
    auto [ptr, ec] = std::from_chars(first, last, s);
    if (ec == std::errc() && ptr == last) return text[1] == '1' ? s1(s) : s2(s);
  }
  throw Error(ErrorKind::InvalidArgument, "bad ideal label '" + text + "'");
}

EichlerContext::EichlerContext(std::uint64_t p, int n, std::optional<int> precision)
    : modulus_(Modulus::make(p, precision.value_or(n + 12))), n_(n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "level exponent n must be >= 1");
  if (modulus_.precision() < n + 2) {
    throw Error(ErrorKind::InvalidArgument, "precision must be at least n + 2");
  }
  census_.reserve(2 * p + 1);
  for (std::uint64_t s = 0; s < p; ++s) census_.push_back({IdealLabel::s1(s), alpha_gen(*this, s)});
  for (std::uint64_t s = 0; s < p; ++s) census_.push_back({IdealLabel::s2(s), beta_gen(*this, s)});
  if (n == 1) census_.push_back({IdealLabel::rad(), gamma_of(*this)});
}

std::size_t EichlerContext::index_of(const IdealLabel& label) const {
  const std::uint64_t q = p();
  switch (label.side) {
    case Side::S1:
      if (label.s < q) return label.s;
      break;
    case Side::S2:
      if (label.s < q) return q + label.s;
      break;
    case Side::Rad:
      if (n_ == 1) return 2 * q;
      break;
  }
  throw Error(ErrorKind::InvalidArgument, "label " + label.to_string() + " not in census");
}

Mat2 gamma_i(const EichlerContext& ctx, int i) {
  if (i < 0 || i > ctx.n()) throw Error(ErrorKind::InvalidArgument, "gamma_i index out of range");
  return Mat2(ctx.modulus(), 0, 1, static_cast<std::int64_t>(ctx.modulus().power(i)), 0);
}

Mat2 gamma_of(const EichlerContext& ctx) { return gamma_i(ctx, ctx.n()); }

Mat2 alpha_gen(const EichlerContext& ctx, std::uint64_t s) {
  if (s >= ctx.p()) throw Error(ErrorKind::InvalidArgument, "coset index out of range");
  return ctx.matrix(1, static_cast<std::int64_t>(s), 0, static_cast<std::int64_t>(ctx.p()));
}

Mat2 beta_gen(const EichlerContext& ctx, std::uint64_t s) {
  if (s >= ctx.p()) throw Error(ErrorKind::InvalidArgument, "coset index out of range");
  auto pn = static_cast<std::int64_t>(ctx.modulus().power(ctx.n()));
  return ctx.matrix(static_cast<std::int64_t>(ctx.p()), 0, static_cast<std::int64_t>(s) * pn, 1);
}

bool contains(const EichlerContext& ctx, const Mat2& m) { return m.at(1, 0).val_at_least(ctx.n()); }

bool is_unit(const EichlerContext& ctx, const Mat2& m) {
  return contains(ctx, m) && m.det().is_unit();
}

const std::vector<NormPIdeal>& enumerate_ideals(const EichlerContext& ctx) { return ctx.census(); }

namespace {

void require_norm_p(const EichlerContext& ctx, const Mat2& g) {
  if (!(g.modulus() == ctx.modulus())) {
    throw Error(ErrorKind::BadGenerator, "generator modulus differs from context");
  }
  if (!contains(ctx, g)) throw Error(ErrorKind::BadGenerator, g.to_string() + " not in O");
  if (g.det().val() != 1) {
    throw Error(ErrorKind::BadGenerator, g.to_string() + " does not have reduced norm of valuation 1");
  }
}

// M = g1 adj(g2) must be p times an element of O; entries are formed lazily
// since most census comparisons fail on the first one.
bool quotient_in_order(const EichlerContext& ctx, const Mat2& g1, const Mat2& g2) {
  const auto& a1 = g1.at(0, 0);
  const auto& b1 = g1.at(0, 1);
  const auto& c1 = g1.at(1, 0);
  const auto& d1 = g1.at(1, 1);
  const auto& a2 = g2.at(0, 0);
  const auto& b2 = g2.at(0, 1);
  const auto& c2 = g2.at(1, 0);
  const auto& d2 = g2.at(1, 1);
  if (!(a1 * d2 - b1 * c2).val_at_least(1)) return false;
  if (!(b1 * a2 - a1 * b2).val_at_least(1)) return false;
  if (!(d1 * a2 - c1 * b2).val_at_least(1)) return false;
  return (c1 * d2 - d1 * c2).val_at_least(ctx.n() + 1);
}

}  // namespace

bool ideal_equal(const EichlerContext& ctx, const Mat2& g1, const Mat2& g2) {
  require_norm_p(ctx, g1);
  require_norm_p(ctx, g2);
  return quotient_in_order(ctx, g1, g2);
}

IdealLabel identify_ideal(const EichlerContext& ctx, const Mat2& g) {
  require_norm_p(ctx, g);
  std::optional<IdealLabel> found;
  for (const auto& ideal : ctx.census()) {
    if (!quotient_in_order(ctx, g, ideal.generator)) continue;
    if (found) {
      throw Error(ErrorKind::InternalCensusError,
                  g.to_string() + " matches both " + found->to_string() + " and " +
                      ideal.label.to_string());
    }
    found = ideal.label;
  }
  if (!found) {
    throw Error(ErrorKind::InternalCensusError, g.to_string() + " matches no census ideal");
  }
  return *found;
}

}  // namespace metacomm
