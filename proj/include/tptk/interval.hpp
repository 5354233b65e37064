#ifndef TPTK_INTERVAL_HPP
#define TPTK_INTERVAL_HPP

#include <mpfr.h>

#include <string>

#include "tptk/rational.hpp"

namespace tptk {

/// Rigorous [lo, hi] enclosure of a real value, using MPFR with directed
/// rounding. All operations round lo down and hi up, so every result
/// encloses the exact value of the operation on any members of the inputs.
class Interval {
public:
    explicit Interval(mpfr_prec_t precision = 128);
    Interval(const Interval& other);
    Interval(Interval&& other) noexcept;
    Interval& operator=(const Interval& other);
    Interval& operator=(Interval&& other) noexcept;
    ~Interval();

    static Interval from_rational(const Rational& value, mpfr_prec_t precision);
    static Interval exact_int(long value, mpfr_prec_t precision);

    mpfr_prec_t precision() const { return precision_; }

    Interval operator+(const Interval& rhs) const;
    Interval operator-(const Interval& rhs) const;
    Interval operator*(const Interval& rhs) const;
    Interval operator/(const Interval& rhs) const;  // rhs must exclude 0
    Interval operator-() const;

    Interval sqrt() const;            // requires lo >= 0
    Interval pow(unsigned long) const;

    // +1 when lo > 0, -1 when hi < 0, 0 when the enclosure straddles zero.
    int sign() const;
    bool contains_zero() const { return sign() == 0; }

    // Strict comparison of enclosures: true when hi < rhs.lo.
    bool strictly_below(const Interval& rhs) const;

    double lo_double() const;
    double hi_double() const;
    std::string lo_string(int digits = 20) const;
    std::string hi_string(int digits = 20) const;

private:
    mpfr_prec_t precision_;
    mpfr_t lo_;
    mpfr_t hi_;

    Interval raw_like() const { return Interval(precision_); }
    friend Interval interval_union(const Interval&, const Interval&);
};

}  // namespace tptk

#endif
