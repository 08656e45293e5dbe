#include "egamma/series.hpp"

#include <stdexcept>

namespace egamma {

namespace {

void require_level(int level) {
  if (level < 2 || level > 7)
    throw std::invalid_argument("level must be between 2 and 7");
}

BigInt tdiv(const BigInt& num, const BigInt& den) {
  BigInt q;
  mpz_tdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

// err_ulps for a rational bound, rounded outward.
BigInt ulps_upper(const Rational& bound, const PrecisionCtx& ctx) {
  if (sgn(bound.get_num()) < 0) throw std::invalid_argument("negative bound");
  return ceil_div(bound.get_num() * ctx.scale(), bound.get_den());
}

}  // namespace

Bounded block_power_sum(int level, unsigned long exponent, const PrecisionCtx& ctx) {
  require_level(level);
  if (exponent < 1) throw std::invalid_argument("block_power_sum: exponent must be >= 1");
  unsigned long half = 1UL << (level - 1);
  FixedPoint acc = FixedPoint::from_mantissa(BigInt(0), ctx.frac_bits());
  for (unsigned long n = half; n < 2 * half; ++n) {
    acc = fx_add(acc, fx_inv_pow(n, exponent, ctx));
  }
  return Bounded{std::move(acc), BigInt(half)};
}

std::vector<Bounded> em_fixed(long m_max, const PrecisionCtx& ctx) {
  if (m_max < 0) throw std::invalid_argument("em_fixed: m_max must be >= 0");
  std::vector<BigInt> mant(static_cast<std::size_t>(m_max) + 1);
  mant[0] = 0;
  PascalRow row(1);
  for (long m = 1; m <= m_max; ++m) {
    row.advance_to(static_cast<unsigned>(m) + 1);
    // 2^(m+1) + sum_{j=1..m} C(m+1, j) e_{m-j}, all on the 2^F grid, then one
    // truncating division by 2^(m+1) - 2. The weights sum to the divisor, so
    // the inherited error never exceeds the worst predecessor plus 1 ulp.
    BigInt acc = pow2(static_cast<unsigned long>(m) + 1 +
                      static_cast<unsigned long>(ctx.frac_bits()));
    for (long j = 1; j <= m; ++j) {
      acc += row.at(static_cast<unsigned>(j)) * mant[static_cast<std::size_t>(m - j)];
    }
    BigInt divisor = pow2(static_cast<unsigned long>(m) + 1) - 2;
    BigInt q = tdiv(acc, divisor);
    if (q * divisor != acc) ctx.note_inexact();
    mant[static_cast<std::size_t>(m)] = std::move(q);
  }
  std::vector<Bounded> out;
  out.reserve(mant.size());
  for (long m = 0; m <= m_max; ++m) {
    out.push_back(Bounded{
        FixedPoint::from_mantissa(std::move(mant[static_cast<std::size_t>(m)]),
                                  ctx.frac_bits()),
        BigInt(m)});
  }
  return out;
}

GammaApproximation gamma_series(const SeriesPlan& plan, const ProgressFn& progress) {
  require_level(plan.level);
  if (plan.terms < 0) throw std::invalid_argument("gamma_series: terms must be >= 0");
  if (plan.frac_bits < 1) throw std::invalid_argument("gamma_series: frac_bits must be >= 1");

  PrecisionCtx ctx(plan.frac_bits);
  unsigned long half = 1UL << (plan.level - 1);

  // Head: H_{2^(level-1) - 1} - (level - 1) ln 2.
  Bounded acc = b_from_rational(harmonic(half - 1), ctx);
  Bounded log2v = fx_log2(ctx);
  acc = b_sub(acc, b_mul_int(log2v, BigInt(plan.level - 1)));

  std::vector<Bounded> fixed_table;
  if (plan.em_source == EmSource::fixed) {
    fixed_table = em_fixed(plan.terms, ctx);
  }

  Rational last_term(0);
  for (long m = 1; m <= plan.terms; ++m) {
    Bounded coeff_num =
        plan.em_source == EmSource::fixed
            ? fixed_table[static_cast<std::size_t>(m)]
            : b_from_rational(e_shared(static_cast<unsigned>(m)), ctx);
    Bounded coeff = b_div_int(coeff_num, BigInt(m + 1), ctx);
    Bounded block = block_power_sum(plan.level, static_cast<unsigned long>(m) + 1, ctx);
    Bounded term = b_mul(coeff, block, ctx);
    acc = (m % 2 == 1) ? b_add(acc, term) : b_sub(acc, term);
    if (m == plan.terms) {
      last_term = abs(term.value.to_rational()) + term.error_bound();
    }
    if (progress && m % 100 == 0) progress(m, plan.terms);
  }

  GammaApproximation result;
  result.value = acc.value;
  result.rounding_bound = acc.error_bound();
  result.total_error_bound = plan.tail_bound + result.rounding_bound;
  result.last_term_magnitude = last_term;
  result.plan = plan;
  result.terms_used = plan.terms;
  return result;
}

namespace {

DeltaRecord delta_impl(unsigned m, const Rational& em, const PrecisionCtx& ctx) {
  Bounded e = b_from_rational(em, ctx);
  Bounded h = b_from_rational(harmonic(m + 1), ctx);
  Bounded log2v = fx_log2(ctx);
  Bounded quotient = b_div(h, log2v, ctx);
  Bounded d = b_sub(e, quotient);
  return DeltaRecord{m, d.value, d.error_bound()};
}

}  // namespace

DeltaRecord delta(unsigned m, const PrecisionCtx& ctx) {
  return delta_impl(m, e_shared(m), ctx);
}

DeltaRecord delta(unsigned m, const PrecisionCtx& ctx, EmTable& table) {
  return delta_impl(m, table.at(m), ctx);
}

Bounded eta_level_series(long s, int level, long terms, const PrecisionCtx& ctx) {
  require_level(level);
  if (s < 1) throw std::invalid_argument("eta_level_series: s must be a positive integer");
  if (s > 4096) throw std::invalid_argument("eta_level_series: s beyond supported range");
  if (terms < 1) throw std::invalid_argument("eta_level_series: terms must be >= 1");

  unsigned long half = 1UL << (level - 1);
  unsigned long su = static_cast<unsigned long>(s);

  // Prefactor (2^s - 2)/2^s times the head sum over 0 < n < 2^(level-1).
  Bounded acc;
  {
    Rational prefactor = make_rational(pow2(su) - 2, pow2(su));
    Rational head(0);
    for (unsigned long n = 1; n < half; ++n) {
      BigInt p;
      mpz_ui_pow_ui(p.get_mpz_t(), n, su);
      head += make_rational(1, p);
    }
    acc = b_from_rational(prefactor * head, ctx);
  }
  // The m = 0 term of the correction sum is the plain block sum at s.
  acc = b_add(acc, block_power_sum(level, su, ctx));

  CmTable cm(s);
  for (long m = 1; m <= terms; ++m) {
    Rational coeff_exact =
        pochhammer_ratio(s, static_cast<unsigned>(m)) * cm.at(static_cast<unsigned>(m));
    Bounded coeff = b_from_rational(coeff_exact, ctx);
    Bounded block = block_power_sum(level, su + static_cast<unsigned long>(m), ctx);
    Bounded term = b_mul(coeff, block, ctx);
    acc = (m % 2 == 1) ? b_sub(acc, term) : b_add(acc, term);
  }

  // Tail majorant: |t_m| <= C(m+s-1, s-1)/(m+1) * 2^-((level-1)(s+m-1)),
  // using c_m(s) <= 1/(m+1) (induction on the recurrence: the weights sum to
  // 2^m - 1 < 2^(m+s) - 2) and the block bound. Successive ratios are at most
  // r = max(M+1+s, M+3)/(M+3) * 2^-(level-1) < 1, so the tail is geometric.
  {
    long m1 = terms + 1;
    Rational t_first =
        pochhammer_ratio(s, static_cast<unsigned>(m1)) /
        Rational(m1 + 1) /
        Rational(pow2(static_cast<unsigned long>(level - 1) *
                      (su + static_cast<unsigned long>(m1) - 1)));
    Rational ratio = make_rational(
        BigInt(std::max(m1 + s, m1 + 2)),
        BigInt(m1 + 2) * pow2(static_cast<unsigned long>(level - 1)));
    if (ratio >= 1)
      throw std::invalid_argument("eta_level_series: terms too small for a tail bound at this s");
    Rational tail = t_first / (Rational(1) - ratio);
    acc.err_ulps += ulps_upper(tail, ctx);
  }
  return acc;
}

Bounded em_derivative_oracle(unsigned m, const Rational& h, const PrecisionCtx& ctx) {
  // h must be dyadic: denominator a power of two.
  BigInt den = h.get_den();
  if (sgn(h.get_num()) <= 0) throw std::invalid_argument("em_derivative_oracle: h must be > 0");
  BigInt den_check = den & (den - 1);
  if (sgn(den_check) != 0)
    throw std::invalid_argument("em_derivative_oracle: h must be dyadic");
  Rational lo = make_rational(1, pow2(60));
  Rational hi = make_rational(1, pow2(10));
  if (h < lo || h > hi)
    throw std::invalid_argument("em_derivative_oracle: h must lie in [2^-60, 2^-10]");
  // -log2 h = log2(den) - log2(num); require F >= 4 * ceil(-log2 h).
  long neg_log2_h = floor_log2(den) - floor_log2(h.get_num());
  if (ctx.frac_bits() < 4 * neg_log2_h)
    throw std::invalid_argument("em_derivative_oracle: frac_bits too small for this h");

  // c_m evaluated at real s via the fixed-point recurrence, divisors
  // 2^(j+s) - 2 built from one 2^s evaluation.
  auto cm_at = [&](const Rational& s) -> Bounded {
    Bounded pow2s = fx_pow2_real(s, ctx);
    Bounded two = b_exact(fx_from_integer(2, ctx));
    std::vector<Bounded> c;
    c.push_back(b_exact(fx_from_integer(1, ctx)));
    PascalRow row(0);
    for (unsigned k = 1; k <= m; ++k) {
      row.advance_to(k);
      Bounded sum = b_mul_int(c[k - 1], row.at(1));
      for (unsigned j = 2; j <= k; ++j) {
        sum = b_add(sum, b_mul_int(c[k - j], row.at(j)));
      }
      Bounded divisor = b_sub(b_shift_up(pow2s, static_cast<long>(k)), two);
      c.push_back(b_div(sum, divisor, ctx));
    }
    return c[m];
  };

  Bounded c_plus = cm_at(Rational(1) + h);
  Bounded c_minus = cm_at(Rational(1) - h);
  Bounded diff = b_sub(c_plus, c_minus);
  Bounded log2v = fx_log2(ctx);
  Bounded step = b_from_rational(2 * h, ctx);  // dyadic, exact
  Bounded denom = b_mul(step, log2v, ctx);
  Bounded quotient = b_div(diff, denom, ctx);
  return b_mul_int(b_neg(quotient), BigInt(m + 1));
}

std::vector<BoundCheck> verify_bounds(unsigned m_lo, unsigned m_hi) {
  if (m_lo > m_hi) throw std::invalid_argument("verify_bounds: m_lo > m_hi");
  const InvLog2Enclosure& inv = inv_log2_enclosure();
  const Rational margin_basic = make_rational(161, 1000);
  const Rational sharp_lo_off = make_rational(35, 100);
  const Rational sharp_hi_off = make_rational(31, 100);

  EmTable table;
  std::vector<BoundCheck> out;
  out.reserve(m_hi - m_lo + 1);
  for (unsigned m = m_lo; m <= m_hi; ++m) {
    const Rational& e = table.at(m);
    Rational h = harmonic(m + 1);
    BoundCheck check;
    check.m = m;
    // Certain-pass comparisons: the unfavorable end of the 1/ln2 enclosure
    // must already satisfy the inequality.
    check.margin_basic_lower = e - (h - 1) * inv.hi;
    check.basic_lower = sgn(check.margin_basic_lower.get_num()) >= 0;
    check.margin_basic_upper = h * inv.lo - margin_basic - e;
    check.basic_upper = sgn(check.margin_basic_upper.get_num()) > 0;
    if (m >= 2) {
      check.sharp_checked = true;
      check.margin_sharp_lower = e - (h * inv.hi - sharp_lo_off);
      check.sharp_lower = sgn(check.margin_sharp_lower.get_num()) > 0;
      check.margin_sharp_upper = (h * inv.lo - sharp_hi_off) - e;
      check.sharp_upper = sgn(check.margin_sharp_upper.get_num()) > 0;
    }
    out.push_back(std::move(check));
  }
  return out;
}

}  // namespace egamma
