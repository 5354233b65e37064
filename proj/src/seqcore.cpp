#include "tptk/seqcore.hpp"

#include <stdexcept>

namespace tptk {

namespace {

std::vector<Rational> zeros(int horizon) {
    return std::vector<Rational>(static_cast<std::size_t>(horizon) + 1, Rational(0));
}

// Multiplies a truncated series by the polynomial factor (1 + alpha z).
void mul_linear_up(std::vector<Rational>& c, const Rational& alpha) {
    for (int k = static_cast<int>(c.size()) - 1; k >= 1; --k)
        c[static_cast<std::size_t>(k)] += alpha * c[static_cast<std::size_t>(k - 1)];
}

// Divides a truncated series by (1 - beta z): b_k = c_k + beta b_{k-1}.
void div_linear_down(std::vector<Rational>& c, const Rational& beta) {
    for (std::size_t k = 1; k < c.size(); ++k) c[k] += beta * c[k - 1];
}

struct Materializer {
    int horizon;

    std::vector<Rational> operator()(const ExplicitSpec& s) const {
        auto out = zeros(horizon);
        for (std::size_t k = 0; k < s.coeffs.size() && k < out.size(); ++k)
            out[k] = s.coeffs[k];
        return out;
    }

    std::vector<Rational> operator()(const FromQuotientsSpec& s) const {
        if (s.a0 <= 0) throw std::invalid_argument("from_quotients: a0 must be positive");
        if (s.a1 <= 0) throw std::invalid_argument("from_quotients: a1 must be positive");
        for (const auto& qj : s.q)
            if (qj <= 0) throw std::invalid_argument("from_quotients: quotients must be positive");
        if (horizon >= 2 && static_cast<int>(s.q.size()) < horizon - 1)
            throw std::invalid_argument("from_quotients: not enough quotients for horizon");
        auto out = zeros(horizon);
        if (horizon >= 0) out[0] = s.a0;
        if (horizon >= 1) out[1] = s.a1;
        for (int n = 2; n <= horizon; ++n) {
            const Rational& qn = s.q[static_cast<std::size_t>(n - 2)];
            out[static_cast<std::size_t>(n)] =
                out[static_cast<std::size_t>(n - 1)] * out[static_cast<std::size_t>(n - 1)] /
                (out[static_cast<std::size_t>(n - 2)] * qn);
        }
        return out;
    }

    std::vector<Rational> operator()(const RationalGFSpec& s) const {
        if (s.pole_order < 1) throw std::invalid_argument("rational_gf: pole_order must be >= 1");
        if (s.beta <= 0) throw std::invalid_argument("rational_gf: beta must be positive");
        auto out = zeros(horizon);
        for (std::size_t k = 0; k < s.numerator.size() && k < out.size(); ++k)
            out[k] = s.numerator[k];
        for (int i = 0; i < s.pole_order; ++i) div_linear_down(out, s.beta);
        return out;
    }

    std::vector<Rational> operator()(const AsweFiniteSpec& s) const {
        if (s.c < 0) throw std::invalid_argument("aswe_finite: c must be nonnegative");
        if (s.shift < 0) throw std::invalid_argument("aswe_finite: shift must be nonnegative");
        if (s.gamma < 0) throw std::invalid_argument("aswe_finite: gamma must be nonnegative");
        for (const auto& a : s.alphas)
            if (a < 0) throw std::invalid_argument("aswe_finite: alphas must be nonnegative");
        for (const auto& b : s.betas)
            if (b < 0) throw std::invalid_argument("aswe_finite: betas must be nonnegative");
        auto out = zeros(horizon);
        if (s.shift <= horizon) out[static_cast<std::size_t>(s.shift)] = s.c;
        for (const auto& a : s.alphas) mul_linear_up(out, a);
        if (s.gamma > 0) {
            // multiply by the exponential series, truncated at the horizon
            auto conv = zeros(horizon);
            Rational term(1);  // gamma^j / j!
            for (int j = 0; j <= horizon; ++j) {
                if (j > 0) term = term * s.gamma / Rational(j);
                for (int k = 0; k + j <= horizon; ++k)
                    conv[static_cast<std::size_t>(k + j)] += out[static_cast<std::size_t>(k)] * term;
            }
            out = std::move(conv);
        }
        for (const auto& b : s.betas) div_linear_down(out, b);
        return out;
    }

    std::vector<Rational> operator()(const PartialThetaSpec& s) const {
        if (s.a_squared <= 1) throw std::invalid_argument("partial_theta: a_squared must exceed 1");
        auto out = zeros(horizon);
        Rational cur(1);  // 1 / (a^2)^{k(k-1)/2}
        Rational pow(1);  // (a^2)^k
        for (int k = 0; k <= horizon; ++k) {
            out[static_cast<std::size_t>(k)] = cur;
            cur /= pow;  // a_{k+1} = a_k / (a^2)^k
            pow *= s.a_squared;
        }
        return out;
    }

    std::vector<Rational> operator()(const ExponentialSpec&) const {
        auto out = zeros(horizon);
        Rational cur(1);
        for (int k = 0; k <= horizon; ++k) {
            out[static_cast<std::size_t>(k)] = cur;
            if (k < horizon) cur /= Rational(k + 1);
        }
        return out;
    }

    std::vector<Rational> operator()(const GeometricSpec& s) const {
        if (s.c <= 0) throw std::invalid_argument("geometric: c must be positive");
        if (s.beta <= 0) throw std::invalid_argument("geometric: beta must be positive");
        auto out = zeros(horizon);
        Rational cur = s.c;
        for (int k = 0; k <= horizon; ++k) {
            out[static_cast<std::size_t>(k)] = cur;
            cur *= s.beta;
        }
        return out;
    }

    std::vector<Rational> operator()(const HadamardSpec& s) const {
        auto left = materialize(*s.left, horizon);
        auto right = materialize(*s.right, horizon);
        return hadamard(left, right).coeffs;
    }

    std::vector<Rational> operator()(const RemainderSpec& s) const {
        auto inner = materialize(*s.inner, horizon);
        return remainder(inner, s.l).coeffs;
    }

    std::vector<Rational> operator()(const DerivativeSpec& s) const {
        auto inner = materialize(*s.inner, horizon);
        return derivative_weights(inner).coeffs;
    }
};

}  // namespace

SpecPtr make_spec(SequenceSpec spec) {
    return std::make_shared<const SequenceSpec>(std::move(spec));
}

CoefficientSequence materialize(const SequenceSpec& spec, int horizon) {
    if (horizon < 0) throw std::invalid_argument("horizon must be nonnegative");
    CoefficientSequence out;
    out.coeffs = std::visit(Materializer{horizon}, spec.value);
    out.source = std::make_shared<const SequenceSpec>(spec);
    return out;
}

CoefficientSequence materialize(const SpecPtr& spec, int horizon) {
    if (!spec) throw std::invalid_argument("null spec");
    return materialize(*spec, horizon);
}

CoefficientSequence hadamard(const CoefficientSequence& a, const CoefficientSequence& b) {
    if (a.horizon() != b.horizon())
        throw std::invalid_argument("hadamard: mismatched horizons");
    CoefficientSequence out;
    out.coeffs.resize(a.coeffs.size());
    for (std::size_t k = 0; k < a.coeffs.size(); ++k) out.coeffs[k] = a.coeffs[k] * b.coeffs[k];
    return out;
}

CoefficientSequence remainder(const CoefficientSequence& a, int l) {
    if (l < 0) throw std::invalid_argument("remainder: l must be nonnegative");
    if (l > a.horizon() + 1) throw std::invalid_argument("remainder: l exceeds horizon");
    CoefficientSequence out;
    out.coeffs = a.coeffs;
    for (int k = 0; k < l && k <= a.horizon(); ++k) out.coeffs[static_cast<std::size_t>(k)] = 0;
    return out;
}

CoefficientSequence derivative_weights(const CoefficientSequence& a) {
    CoefficientSequence out;
    out.coeffs.resize(a.coeffs.size());
    for (std::size_t k = 0; k < a.coeffs.size(); ++k)
        out.coeffs[k] = a.coeffs[k] * Rational(static_cast<long>(k));
    return out;
}

CoefficientSequence normalize(const CoefficientSequence& a) {
    if (a.horizon() < 1) throw std::invalid_argument("normalize: need coefficients 0 and 1");
    const Rational& a0 = a.coeffs[0];
    const Rational& a1 = a.coeffs[1];
    if (a0 <= 0 || a1 <= 0) throw std::invalid_argument("normalize: a0 and a1 must be positive");
    CoefficientSequence out;
    out.coeffs.resize(a.coeffs.size());
    Rational scale(1);  // a0^{k-1} / a1^k
    out.coeffs[0] = 1;
    for (std::size_t k = 1; k < a.coeffs.size(); ++k) {
        if (k == 1)
            scale = Rational(1) / a1;
        else
            scale = scale * a0 / a1;
        out.coeffs[k] = a.coeffs[k] * scale;
    }
    return out;
}

}  // namespace tptk
