#include "tptk/interval.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace tptk {

Interval::Interval(mpfr_prec_t precision) : precision_(precision) {
    if (precision < 64) throw std::invalid_argument("precision must be at least 64 bits");
    mpfr_init2(lo_, precision_);
    mpfr_init2(hi_, precision_);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) : precision_(other.precision_) {
    mpfr_init2(lo_, precision_);
    mpfr_init2(hi_, precision_);
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : precision_(other.precision_) {
    mpfr_init2(lo_, precision_);
    mpfr_init2(hi_, precision_);
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
    if (this != &other) {
        mpfr_set_prec(lo_, other.precision_);
        mpfr_set_prec(hi_, other.precision_);
        precision_ = other.precision_;
        mpfr_set(lo_, other.lo_, MPFR_RNDD);
        mpfr_set(hi_, other.hi_, MPFR_RNDU);
    }
    return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
    if (this != &other) {
        precision_ = other.precision_;
        mpfr_swap(lo_, other.lo_);
        mpfr_swap(hi_, other.hi_);
    }
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::from_rational(const Rational& value, mpfr_prec_t precision) {
    Interval out(precision);
    mpfr_set_q(out.lo_, value.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(out.hi_, value.get_mpq_t(), MPFR_RNDU);
    return out;
}

Interval Interval::exact_int(long value, mpfr_prec_t precision) {
    Interval out(precision);
    mpfr_set_si(out.lo_, value, MPFR_RNDD);
    mpfr_set_si(out.hi_, value, MPFR_RNDU);
    return out;
}

Interval Interval::operator+(const Interval& rhs) const {
    Interval out(std::max(precision_, rhs.precision_));
    mpfr_add(out.lo_, lo_, rhs.lo_, MPFR_RNDD);
    mpfr_add(out.hi_, hi_, rhs.hi_, MPFR_RNDU);
    return out;
}

Interval Interval::operator-(const Interval& rhs) const {
    Interval out(std::max(precision_, rhs.precision_));
    mpfr_sub(out.lo_, lo_, rhs.hi_, MPFR_RNDD);
    mpfr_sub(out.hi_, hi_, rhs.lo_, MPFR_RNDU);
    return out;
}

Interval Interval::operator-() const {
    Interval out(precision_);
    mpfr_neg(out.lo_, hi_, MPFR_RNDD);
    mpfr_neg(out.hi_, lo_, MPFR_RNDU);
    return out;
}

Interval Interval::operator*(const Interval& rhs) const {
    Interval out(std::max(precision_, rhs.precision_));
    mpfr_t cand, best_lo, best_hi;
    mpfr_init2(cand, out.precision_);
    mpfr_init2(best_lo, out.precision_);
    mpfr_init2(best_hi, out.precision_);
    const mpfr_srcptr a[2] = {lo_, hi_};
    const mpfr_srcptr b[2] = {rhs.lo_, rhs.hi_};
    bool first = true;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            mpfr_mul(cand, a[i], b[j], MPFR_RNDD);
            if (first || mpfr_cmp(cand, best_lo) < 0) mpfr_set(best_lo, cand, MPFR_RNDD);
            mpfr_mul(cand, a[i], b[j], MPFR_RNDU);
            if (first || mpfr_cmp(cand, best_hi) > 0) mpfr_set(best_hi, cand, MPFR_RNDU);
            first = false;
        }
    mpfr_set(out.lo_, best_lo, MPFR_RNDD);
    mpfr_set(out.hi_, best_hi, MPFR_RNDU);
    mpfr_clear(cand);
    mpfr_clear(best_lo);
    mpfr_clear(best_hi);
    return out;
}

Interval Interval::operator/(const Interval& rhs) const {
    if (rhs.sign() == 0) throw std::domain_error("interval division by an enclosure of zero");
    Interval out(std::max(precision_, rhs.precision_));
    mpfr_t cand, best_lo, best_hi;
    mpfr_init2(cand, out.precision_);
    mpfr_init2(best_lo, out.precision_);
    mpfr_init2(best_hi, out.precision_);
    const mpfr_srcptr a[2] = {lo_, hi_};
    const mpfr_srcptr b[2] = {rhs.lo_, rhs.hi_};
    bool first = true;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            mpfr_div(cand, a[i], b[j], MPFR_RNDD);
            if (first || mpfr_cmp(cand, best_lo) < 0) mpfr_set(best_lo, cand, MPFR_RNDD);
            mpfr_div(cand, a[i], b[j], MPFR_RNDU);
            if (first || mpfr_cmp(cand, best_hi) > 0) mpfr_set(best_hi, cand, MPFR_RNDU);
            first = false;
        }
    mpfr_set(out.lo_, best_lo, MPFR_RNDD);
    mpfr_set(out.hi_, best_hi, MPFR_RNDU);
    mpfr_clear(cand);
    mpfr_clear(best_lo);
    mpfr_clear(best_hi);
    return out;
}

Interval Interval::sqrt() const {
    if (mpfr_sgn(lo_) < 0) throw std::domain_error("interval sqrt of a possibly negative value");
    Interval out(precision_);
    mpfr_sqrt(out.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(out.hi_, hi_, MPFR_RNDU);
    return out;
}

Interval Interval::pow(unsigned long e) const {
    Interval out = Interval::exact_int(1, precision_);
    Interval base = *this;
    while (e > 0) {
        if (e & 1UL) out = out * base;
        base = base * base;
        e >>= 1UL;
    }
    return out;
}

int Interval::sign() const {
    if (mpfr_sgn(lo_) > 0) return 1;
    if (mpfr_sgn(hi_) < 0) return -1;
    return 0;
}

bool Interval::strictly_below(const Interval& rhs) const {
    return mpfr_cmp(hi_, rhs.lo_) < 0;
}

double Interval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

namespace {
std::string mpfr_to_string(mpfr_srcptr x, int digits, mpfr_rnd_t rnd) {
    std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
    std::string fmt = "%." + std::to_string(digits) + "R*e";
    mpfr_snprintf(buf.data(), buf.size(), fmt.c_str(), rnd, x);
    return std::string(buf.data());
}
}  // namespace

std::string Interval::lo_string(int digits) const { return mpfr_to_string(lo_, digits, MPFR_RNDD); }
std::string Interval::hi_string(int digits) const { return mpfr_to_string(hi_, digits, MPFR_RNDU); }

}  // namespace tptk
