#include "tptk/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace tptk {

namespace {

const Rational kZero(0);

void strip_trailing_zeros(std::vector<Rational>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

// Clears denominators and divides by the content; the sign of the leading
// coefficient is preserved. Input must be nonzero.
std::vector<Integer> primitive_integer(const std::vector<Rational>& c) {
    Integer den_lcm(1);
    for (const auto& r : c)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), r.get_den().get_mpz_t());
    std::vector<Integer> out(c.size());
    Integer content(0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        out[i] = c[i].get_num() * (den_lcm / c[i].get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[i].get_mpz_t());
    }
    for (auto& z : out) z /= content;
    return out;
}

void make_primitive(std::vector<Integer>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    if (c.empty()) return;
    Integer content(0);
    for (const auto& z : c)
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
    for (auto& z : c) z /= content;
}

// r = prem(a, b) with a positive overall multiplier: r is a positive rational
// multiple of (a mod b). Both inputs primitive, deg a >= deg b >= 0.
std::vector<Integer> pseudo_remainder_positive(std::vector<Integer> a,
                                               const std::vector<Integer>& b) {
    const Integer& lc = b.back();
    int db = static_cast<int>(b.size()) - 1;
    int steps = static_cast<int>(a.size()) - static_cast<int>(b.size()) + 1;
    bool flip = lc < 0 && (steps % 2 == 1);
    for (int pass = 0; pass < steps; ++pass) {
        int da = static_cast<int>(a.size()) - 1;
        Integer top = a.back();
        for (auto& z : a) z *= lc;
        for (int i = 0; i <= db; ++i) a[da - db + i] -= top * b[i];
        a.pop_back();
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (static_cast<int>(a.size()) - 1 < db) {
            // account for skipped multiplications: parity of remaining passes
            int remaining = steps - pass - 1;
            flip = lc < 0 && ((steps - remaining) % 2 == 1);
            break;
        }
    }
    make_primitive(a);
    if (flip)
        for (auto& z : a) z = -z;
    return a;
}

int sign_of(const Integer& z) { return mpz_sgn(z.get_mpz_t()); }

int count_variations(const std::vector<int>& signs) {
    int last = 0, var = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    strip_trailing_zeros(coeffs_);
}

Polynomial Polynomial::constant(const Rational& c) {
    return Polynomial(std::vector<Rational>{c});
}

Rational Polynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& Polynomial::leading() const {
    if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(d));
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    std::vector<Rational> out(std::max(coeffs_.size(), other.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    return *this + (-other);
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> out(coeffs_);
    for (auto& r : out) r = -r;
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (is_zero() || other.is_zero()) return Polynomial();
    std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * other.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
    std::vector<Rational> out(coeffs_);
    for (auto& r : out) r *= scalar;
    return Polynomial(std::move(out));
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    std::vector<Rational> rem(coeffs_);
    strip_trailing_zeros(rem);
    if (rem.size() < divisor.coeffs_.size()) {
        if (rem.empty()) return Polynomial();
        throw std::domain_error("inexact polynomial division");
    }
    std::vector<Rational> quot(rem.size() - divisor.coeffs_.size() + 1, Rational(0));
    const auto& d = divisor.coeffs_;
    while (rem.size() >= d.size() && !rem.empty()) {
        Rational factor = rem.back() / d.back();
        std::size_t shift = rem.size() - d.size();
        quot[shift] = factor;
        for (std::size_t i = 0; i < d.size(); ++i) rem[shift + i] -= factor * d[i];
        strip_trailing_zeros(rem);
    }
    if (!rem.empty()) throw std::domain_error("inexact polynomial division");
    return Polynomial(std::move(quot));
}

int Polynomial::order_at_zero() const {
    if (is_zero()) return 0;
    int k = 0;
    while (coeffs_[static_cast<std::size_t>(k)] == 0) ++k;
    return k;
}

Polynomial Polynomial::shift_down(int k) const {
    if (k == 0) return *this;
    if (order_at_zero() < k) throw std::domain_error("shift_down would truncate nonzero terms");
    std::vector<Rational> out(coeffs_.begin() + k, coeffs_.end());
    return Polynomial(std::move(out));
}

SturmChain::SturmChain(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("Sturm chain of the zero polynomial");
    chain_.push_back(primitive_integer(p.coeffs()));
    Polynomial dp = p.derivative();
    if (dp.is_zero()) return;
    chain_.push_back(primitive_integer(dp.coeffs()));
    while (chain_.back().size() > 1) {
        auto next = pseudo_remainder_positive(chain_[chain_.size() - 2], chain_.back());
        if (next.empty()) break;
        for (auto& z : next) z = -z;
        chain_.push_back(std::move(next));
    }
}

int SturmChain::variations_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& poly : chain_) {
        Rational acc(0);
        for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + Rational(*it);
        signs.push_back(sgn(acc));
    }
    return count_variations(signs);
}

int SturmChain::variations_at_neg_infinity() const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& poly : chain_) {
        int s = sign_of(poly.back());
        if ((poly.size() - 1) % 2 == 1) s = -s;
        signs.push_back(s);
    }
    return count_variations(signs);
}

int SturmChain::variations_at_pos_infinity() const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& poly : chain_) signs.push_back(sign_of(poly.back()));
    return count_variations(signs);
}

int sturm_count_distinct(const Polynomial& p,
                         const std::optional<Rational>& lo,
                         const std::optional<Rational>& hi) {
    if (p.is_zero()) throw std::domain_error("root count of the zero polynomial");
    if (p.degree() == 0) return 0;
    if (lo && hi && *lo >= *hi) return 0;
    SturmChain chain(p);
    int vlo = lo ? chain.variations_at(*lo) : chain.variations_at_neg_infinity();
    int vhi = hi ? chain.variations_at(*hi) : chain.variations_at_pos_infinity();
    return vlo - vhi;
}

std::vector<Polynomial> squarefree_decomposition(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("squarefree decomposition of zero");
    std::vector<Polynomial> out;
    if (p.degree() == 0) return out;
    // layers[j] = squarefree part of p after stripping j multiplicity levels;
    // the factor of multiplicity exactly j+1 is layers[j] / layers[j+1].
    std::vector<Polynomial> layers;
    Polynomial cur = p;
    while (cur.degree() > 0) {
        layers.push_back(squarefree_part(cur));
        cur = cur.divide_exact(layers.back());
    }
    for (std::size_t i = 0; i < layers.size(); ++i) {
        if (i + 1 < layers.size())
            out.push_back(layers[i].divide_exact(layers[i + 1]));
        else
            out.push_back(layers[i]);
    }
    return out;
}

namespace {

// Primitive integer gcd of two rational polynomials.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::vector<Integer> x = primitive_integer(a.coeffs());
    std::vector<Integer> y = primitive_integer(b.coeffs());
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        auto r = pseudo_remainder_positive(x, y);
        x = std::move(y);
        y = std::move(r);
        if (!y.empty() && y.size() > x.size()) std::swap(x, y);
    }
    std::vector<Rational> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = Rational(x[i]);
    if (!out.empty() && out.back() < 0)
        for (auto& r : out) r = -r;
    return Polynomial(std::move(out));
}

}  // namespace

Polynomial squarefree_part(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("squarefree part of zero");
    if (p.degree() == 0) return Polynomial::constant(Rational(1));
    Polynomial g = poly_gcd(p, p.derivative());
    return p.divide_exact(g);
}

int sturm_count(const Polynomial& p,
                const std::optional<Rational>& lo,
                const std::optional<Rational>& hi) {
    if (p.is_zero()) throw std::domain_error("root count of the zero polynomial");
    int total = 0;
    auto layers = squarefree_decomposition(p);
    for (std::size_t i = 0; i < layers.size(); ++i) {
        if (layers[i].degree() <= 0) continue;
        total += static_cast<int>(i + 1) * sturm_count_distinct(layers[i], lo, hi);
    }
    return total;
}

Rational cauchy_root_bound(const Polynomial& p) {
    if (p.is_zero() || p.degree() == 0) return Rational(1);
    Rational bound(0);
    const Rational lead = abs(p.leading());
    for (int k = 0; k < p.degree(); ++k) {
        Rational ratio = abs(p.coeff(k)) / lead;
        if (ratio > bound) bound = ratio;
    }
    return bound + 1;
}

Rational simplest_rational_in(const Rational& lo, const Rational& hi) {
    if (lo > hi) throw std::invalid_argument("empty interval");
    // Stern-Brocot style recursion on the interval.
    if (lo <= 0 && hi >= 0) return Rational(0);
    if (hi < 0) return -simplest_rational_in(-hi, -lo);
    Integer floor_lo = lo.get_num() / lo.get_den();
    if (lo.get_num() % lo.get_den() != 0 || lo.get_num() < 0) {
        mpz_fdiv_q(floor_lo.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
    }
    Rational f(floor_lo);
    if (f == lo) return lo;
    if (f + 1 <= hi) return f + 1;
    Rational inner = simplest_rational_in(Rational(1) / (hi - f), Rational(1) / (lo - f));
    return f + Rational(1) / inner;
}

std::optional<IsolatedRoot> isolate_smallest_positive_root(const Polynomial& p,
                                                           const Rational& width) {
    Polynomial sq = squarefree_part(p);
    Rational zero(0);
    Rational hi = cauchy_root_bound(sq);
    if (sturm_count_distinct(sq, zero, hi) == 0) return std::nullopt;
    Rational lo = zero;
    // keep at least the smallest root in (lo, hi]
    while (hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        if (sturm_count_distinct(sq, lo, mid) > 0)
            hi = mid;
        else
            lo = mid;
    }
    IsolatedRoot out{lo, hi, std::nullopt};
    Rational candidate = simplest_rational_in(lo, hi);
    if (sq(candidate) == 0) out.exact = candidate;
    return out;
}

}  // namespace tptk
