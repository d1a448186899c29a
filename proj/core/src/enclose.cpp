#include "rbss/enclose.hpp"

#include <stdexcept>

namespace rbss {

std::string Enclosure::str() const { return "[" + lo.str() + ", " + hi.str() + "]"; }

namespace {

// Both Riemann sums are sums of the same terms, offset by one: with
// x = p/q, term k is (x-1)/(1 + k(x-1)/n) / n = (p-q) / (nq + k(p-q)).
// The upper sum takes k = 0..n-1, the lower k = 1..n.
Rat sum_term(const Rat& x, long n, long k) {
  mpz_class d = x.num() - x.den();
  return Rat(mpq_class(d, mpz_class(x.den()) * n + k * d));
}

// beyond this many terms the exact partial sums grow unwieldy denominators
constexpr long kExactTermLimit = 4096;

// least n with (x-1)^2 / (n x) <= bound
long intervals_for(const Rat& x, const Rat& bound) {
  Rat need = (x - Rat(1)) * (x - Rat(1)) / (x * bound);
  mpz_class c = need.ceil();
  if (c < 1) return 1;
  if (!c.fits_slong_p())
    throw std::invalid_argument("ln_cert: eps too small, interval count overflows");
  return c.get_si();
}

// Sum of terms k in [k0, k1), each rounded onto the 1/grid lattice: down
// for a lower bound, up for an upper bound. Every term is positive, so the
// rounded sum brackets the exact one by (k1-k0)/grid.
Rat rounded_sum(const Rat& x, long n, long k0, long k1, const mpz_class& grid, bool up) {
  mpz_class d = x.num() - x.den();
  mpz_class den = mpz_class(x.den()) * n + k0 * d;
  mpz_class num = d * grid;
  mpz_class total = 0, q, r;
  for (long k = k0; k < k1; ++k, den += d) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (up && r != 0) ++q;
    total += q;
  }
  return Rat(mpq_class(total, grid));
}

Enclosure ln_above_one(const Rat& x, const Rat& eps) {
  long n = intervals_for(x, eps);
  if (n <= kExactTermLimit) return ln_bounds(x, n);

  // a finer grid costs nothing but integer width, so nearly the whole
  // budget buys the bracket: 9/10 exact, 1/20 of rounding slack per side
  n = intervals_for(x, eps * Rat(9, 10));
  Rat target = Rat(20) * Rat(n) / eps;
  mpz_class grid = 1;
  while (Rat(mpq_class(grid)) < target) grid *= 10;
  return {rounded_sum(x, n, 1, n + 1, grid, false), rounded_sum(x, n, 0, n, grid, true)};
}

}  // namespace

Enclosure ln_bounds(const Rat& x, long n) {
  if (x <= Rat(1))
    throw std::invalid_argument("ln_bounds needs x > 1 (smaller arguments go through ln_cert)");
  if (n < 1) throw std::invalid_argument("ln_bounds needs at least one interval");
  Rat upper(0);
  for (long k = 0; k < n; ++k) upper += sum_term(x, n, k);
  Rat lower = upper - sum_term(x, n, 0) + sum_term(x, n, n);
  return {lower, upper};
}

Enclosure ln_cert(const Rat& x, const Rat& eps) {
  if (eps.sign() <= 0) throw std::invalid_argument("ln_cert needs eps > 0");
  if (x.sign() <= 0) throw std::invalid_argument("ln is only defined for x > 0");
  if (x.is_one()) return {Rat(0), Rat(0)};
  if (x < Rat(1)) {
    Enclosure e = ln_cert(x.inv(), eps);
    return {e.hi.neg(), e.lo.neg()};
  }
  return ln_above_one(x, eps);
}

Enclosure exp_cert(const Rat& x, const Rat& eps) {
  if (eps.sign() <= 0) throw std::invalid_argument("exp_cert needs eps > 0");
  if (x.is_zero()) return {Rat(1), Rat(1)};

  Rat hi(1);
  if (x.sign() > 0) {
    mpz_class c = x.ceil();
    if (!c.fits_ulong_p()) throw std::invalid_argument("exp_cert: x too large to bracket");
    mpz_class cap;
    mpz_ui_pow_ui(cap.get_mpz_t(), 4, c.get_ui());  // e^x < 4^ceil(x)
    hi = Rat(mpq_class(cap));
  }
  Rat lo(0);
  while (hi - lo > eps) {
    Rat mid = (lo + hi) / Rat(2);
    // resolution tuned to the bracket: coarse while it is wide, and just
    // fine enough to finish once it nears eps
    Rat delta = (hi - lo) / (Rat(8) * mid);
    Rat finest = eps / (Rat(5) * mid);
    if (delta < finest) delta = finest;
    if (delta > Rat(1, 4)) delta = Rat(1, 4);
    Enclosure l = ln_cert(mid, delta);
    if (l.lo > x) {
      hi = mid;
    } else if (l.hi < x) {
      lo = mid;
    } else {
      // the enclosure straddles x, so |ln mid - x| <= delta, which pins
      // e^x inside mid * [e^-delta, e^delta]; e^delta <= 1/(1 - delta)
      // turns that into the rational clamp below, which shrinks the
      // bracket to at most a third (or under eps when delta hit bottom)
      Rat slack = mid * delta / (Rat(1) - delta);
      if (mid - slack > lo) lo = mid - slack;
      if (mid + slack < hi) hi = mid + slack;
    }
  }
  return {lo, hi};
}

}  // namespace rbss
