#include "hooksum/asymptotics.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "hooksum/special_functions.hpp"

namespace hooksum {

namespace {

// Linear combination of logarithm atoms with (rational, exactly
// representable) coefficients. Atoms are keyed by value, so equal atoms
// merge and integer-cancelling products vanish with coefficient exactly 0
// instead of leaving float noise. That is what makes a(1,1,1) evaluate to
// exactly ln(1/2).
class LogCombination {
  public:
    void add(double coeff, double atom) {
        if (coeff == 0.0 || atom == 0.0) return;
        terms_[atom] += coeff;
    }
    double value() const {
        double s = 0.0;
        for (const auto& [atom, coeff] : terms_)
            if (coeff != 0.0) s += coeff * atom;
        return s;
    }

  private:
    std::map<double, double> terms_;
};

void require_hook(unsigned k, unsigned l, double z) {
    if (k < 1 || l < 1)
        throw DomainError("hook formulas need k >= 1 and l >= 1");
    if (!(z > 0.0)) throw DomainError("z must be positive");
}

double log_int(unsigned v) { return std::log(static_cast<double>(v)); }

void add_log_factorial(LogCombination& c, double coeff, unsigned m) {
    for (unsigned i = 2; i <= m; ++i) c.add(coeff, log_int(i));
}

double log_factorial(unsigned m) {
    double s = 0.0;
    for (unsigned i = 2; i <= m; ++i) s += log_int(i);
    return s;
}

double log_vandermonde(std::span<const double> x) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            const double diff = x[i] - x[j];
            if (diff == 0.0)
                throw DegenerateShape(
                    "coinciding scaled rows: Vandermonde factor is 0");
            if (diff < 0.0)
                throw std::logic_error("scaled coordinates out of order");
            s += std::log(diff);
        }
    }
    return s;
}

double sum_squares(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

}  // namespace

namespace detail {

double g_hook_any(unsigned k, unsigned l, double z) {
    const double quad =
        static_cast<double>(k) * (k + 1) + static_cast<double>(l) * (l + 1);
    return 0.5 * (z * (quad - 2.0) - static_cast<double>(k + l - 1));
}

double log_a_hook_any(unsigned k, unsigned l, double z) {
    const double tz = 2.0 * z;
    const double L2 = std::log(2.0);
    const double LPI = std::log(std::numbers::pi);
    const double LS = log_int(k + l);
    const double L2Z = std::log(tz);
    const double w =
        static_cast<double>(k) * (k - 1) + static_cast<double>(l) * (l - 1);

    LogCombination c;
    // [ (2pi)^{-(k+l-1)/2} * 2^{-kl} * (k+l)^{(k^2+l^2)/2} ]^{2z}
    c.add(-tz * static_cast<double>(k + l - 1) / 2.0, L2);
    c.add(-tz * static_cast<double>(k + l - 1) / 2.0, LPI);
    c.add(-tz * static_cast<double>(k) * l, L2);
    c.add(tz * static_cast<double>(k * k + l * l) / 2.0, LS);
    // (k+l)^{-[z w + k + l]/2}
    c.add(-(z * w + (k + l)) / 2.0, LS);
    // 1/(k! l!)
    add_log_factorial(c, -1.0, k);
    add_log_factorial(c, -1.0, l);
    // sqrt(z/pi), with ln z written as ln(2z) - ln 2
    c.add(0.5, L2Z);
    c.add(-0.5, L2);
    c.add(-0.5, LPI);
    // (2pi)^{(k+l)/2}
    c.add(static_cast<double>(k + l) / 2.0, L2);
    c.add(static_cast<double>(k + l) / 2.0, LPI);
    // (2z)^{-[z w + k + l]/2}
    c.add(-(z * w + (k + l)) / 2.0, L2Z);
    // Gamma(1+z)^{-(k+l)} * prod Gamma(1+zi) * prod Gamma(1+zj)
    c.add(-static_cast<double>(k + l), log_gamma(1.0 + z));
    for (unsigned i = 1; i <= k; ++i) c.add(1.0, log_gamma(1.0 + z * i));
    for (unsigned j = 1; j <= l; ++j) c.add(1.0, log_gamma(1.0 + z * j));
    return c.value();
}

double full_I_closed(unsigned k, unsigned l, double z) {
    const double L2 = std::log(2.0);
    const double LPI = std::log(std::numbers::pi);
    const double LS = log_int(k + l);
    const double L2Z = std::log(2.0 * z);
    const double w =
        static_cast<double>(k) * (k - 1) + static_cast<double>(l) * (l - 1);

    LogCombination c;
    c.add(-(z * w + (k + l)) / 2.0, LS);
    add_log_factorial(c, -1.0, k);
    add_log_factorial(c, -1.0, l);
    c.add(0.5, L2Z);
    c.add(-0.5, L2);
    c.add(-0.5, LPI);
    c.add(static_cast<double>(k + l) / 2.0, L2);
    c.add(static_cast<double>(k + l) / 2.0, LPI);
    c.add(-(z * w + (k + l)) / 2.0, L2Z);
    c.add(-static_cast<double>(k + l), log_gamma(1.0 + z));
    for (unsigned i = 1; i <= k; ++i) c.add(1.0, log_gamma(1.0 + z * i));
    for (unsigned j = 1; j <= l; ++j) c.add(1.0, log_gamma(1.0 + z * j));
    return c.value();
}

double full_I_product(unsigned k, unsigned l, double z) {
    // ln J, J = sqrt(k l pi / (z (k+l)^2))
    const double log_j =
        0.5 * (log_int(k) + log_int(l) + std::log(std::numbers::pi) -
               std::log(z)) -
        log_int(k + l);
    return log_j + scaled_I_k(k, l, z) + scaled_I_k(l, k, z);
}

double strip_gamma_log(unsigned k) {
    LogCombination c;
    const double L2PI = std::log(2.0 * std::numbers::pi);
    c.add(-static_cast<double>(k - 1) / 2.0, L2PI);
    c.add(static_cast<double>(k * k) / 2.0, log_int(k));
    return c.value();
}

}  // namespace detail

double g_hook(unsigned k, unsigned l, double z) {
    require_hook(k, l, z);
    return detail::g_hook_any(k, l, z);
}

double log_a_hook(unsigned k, unsigned l, double z) {
    require_hook(k, l, z);
    return detail::log_a_hook_any(k, l, z);
}

double log_a_hook_half(unsigned k, unsigned l) {
    if (k < 1 || l < 1)
        throw DomainError("log_a_hook_half needs k, l >= 1");
    const double L2 = std::log(2.0);
    const double LPI = std::log(std::numbers::pi);
    const double LS = log_int(k + l);
    const double quad =
        static_cast<double>(k) * (k - 1) + static_cast<double>(l) * (l - 1);

    LogCombination c;
    // (1/2)^{kl - k - l}; the exponent may be negative
    c.add(-(static_cast<double>(k) * l - k - l), L2);
    c.add(-static_cast<double>(k + l) / 2.0, LPI);
    c.add(quad / 4.0, LS);
    add_log_factorial(c, -1.0, k);
    add_log_factorial(c, -1.0, l);
    for (unsigned i = 1; i <= k; ++i)
        c.add(1.0, log_gamma(1.0 + 0.5 * i));
    for (unsigned j = 1; j <= l; ++j)
        c.add(1.0, log_gamma(1.0 + 0.5 * j));
    return c.value();
}

AsymptoticForm strip_asymptotics(unsigned k, double z) {
    if (k < 1) throw DomainError("strip_asymptotics needs k >= 1");
    if (!(z > 0.0)) throw DomainError("z must be positive");
    const double tz = 2.0 * z;
    const double L2 = std::log(2.0);
    const double LPI = std::log(std::numbers::pi);
    const double LK = log_int(k);
    const double L2Z = std::log(tz);
    const double w = static_cast<double>(k) * (k - 1);

    LogCombination c;
    // [ (2pi)^{-(k-1)/2} * k^{k^2/2} ]^{2z}
    c.add(-tz * static_cast<double>(k - 1) / 2.0, L2);
    c.add(-tz * static_cast<double>(k - 1) / 2.0, LPI);
    c.add(tz * static_cast<double>(k * k) / 2.0, LK);
    // k^{-[z k(k-1) + k]/2}
    c.add(-(z * w + k) / 2.0, LK);
    add_log_factorial(c, -1.0, k);
    c.add(0.5, L2Z);
    c.add(-0.5, L2);
    c.add(-0.5, LPI);
    c.add(static_cast<double>(k) / 2.0, L2);
    c.add(static_cast<double>(k) / 2.0, LPI);
    c.add(-(z * w + k) / 2.0, L2Z);
    c.add(-static_cast<double>(k), log_gamma(1.0 + z));
    for (unsigned j = 1; j <= k; ++j) c.add(1.0, log_gamma(1.0 + z * j));

    const double g =
        0.5 * (z * static_cast<double>(k * k + k - 2) -
               static_cast<double>(k - 1));
    return AsymptoticForm{c.value(), g, tz * LK};
}

CTheta c_theta(unsigned k, unsigned l) {
    if (k < 1 || l < 1) throw DomainError("c_theta needs k, l >= 1");
    const double L2 = std::log(2.0);
    const double LPI = std::log(std::numbers::pi);
    LogCombination c;
    c.add(-static_cast<double>(k + l - 1) / 2.0, L2);
    c.add(-static_cast<double>(k + l - 1) / 2.0, LPI);
    c.add(-static_cast<double>(k) * l, L2);
    c.add(static_cast<double>(k * k + l * l) / 2.0, log_int(k + l));
    CTheta r;
    r.log_c = c.value();
    r.theta = static_cast<double>(k * (k + 1) + l * (l + 1) - 2) / 4.0;
    return r;
}

double psi_selberg(unsigned s, double beta) {
    if (s < 1) throw DomainError("psi_selberg needs s >= 1");
    if (!(beta > 0.0)) throw DomainError("beta must be positive");
    const double L2PI = std::log(2.0 * std::numbers::pi);
    double r = 0.5 * s * L2PI;
    r += (-0.5 * s - beta * s * (s - 1.0) / 4.0) * std::log(beta);
    r -= s * log_gamma(1.0 + 0.5 * beta);
    for (unsigned j = 1; j <= s; ++j) r += log_gamma(1.0 + 0.5 * beta * j);
    return r;
}

double selberg_I(unsigned s, double beta) {
    if (s < 1) throw DomainError("selberg_I needs s >= 1");
    if (!(beta > 0.0)) throw DomainError("beta must be positive");
    const double L2PI = std::log(2.0 * std::numbers::pi);
    return -log_factorial(s) - 0.5 * log_int(s) +
           0.5 * (std::log(beta) - L2PI) + psi_selberg(s, beta);
}

double scaled_I_k(unsigned k, unsigned l, double z) {
    require_hook(k, l, z);
    const double expo =
        (static_cast<double>(k) * (k - 1) * z + (k - 1)) / 2.0;
    return -expo * log_int(k + l) + selberg_I(k, 2.0 * z);
}

double full_I(unsigned k, unsigned l, double z) {
    require_hook(k, l, z);
    const double closed = detail::full_I_closed(k, l, z);
    const double product = detail::full_I_product(k, l, z);
    if (std::fabs(closed - product) > 1e-12)
        throw std::logic_error(
            "full_I: product and closed forms disagree beyond 1e-12");
    return closed;
}

AsymptoticForm hook_asymptotic(unsigned k, unsigned l, double z) {
    require_hook(k, l, z);
    AsymptoticForm f;
    f.log_a = log_a_hook(k, l, z);
    f.g = g_hook(k, l, z);
    f.log_base = 2.0 * z * log_int(k + l);

    const CTheta ct = c_theta(k, l);
    if (std::fabs(f.g - (2.0 * z * ct.theta -
                         static_cast<double>(k + l - 1) / 2.0)) > 1e-12)
        throw std::logic_error("hook_asymptotic: g vs theta mismatch");
    if (std::fabs(f.log_a - (2.0 * z * ct.log_c + full_I(k, l, z))) > 1e-12)
        throw std::logic_error("hook_asymptotic: a vs c^2z I mismatch");
    return f;
}

ScaledCoordinates coords_from_decomposition(const HookDecomposition& d) {
    if (d.n_bar < 1) throw DomainError("coordinates need n_bar >= 1");
    const double sq = std::sqrt(static_cast<double>(d.n_bar));
    const double center =
        static_cast<double>(d.n_bar) / static_cast<double>(d.k + d.l);

    ScaledCoordinates sc;
    sc.alpha.resize(d.k);
    for (unsigned i = 0; i < d.k; ++i)
        sc.alpha[i] = (static_cast<double>(d.nu.part(i + 1)) - center) / sq;
    sc.beta.resize(d.l);
    for (unsigned j = 0; j < d.l; ++j)
        sc.beta[j] = (static_cast<double>(d.mu.part(j + 1)) - center) / sq;
    for (double v : sc.alpha) sc.alpha_sum += v;

    if (d.k >= 1) {
        const double fac = std::sqrt(static_cast<double>(d.k + d.l) / d.k);
        const double shift = sc.alpha_sum / d.k;
        sc.a.resize(d.k);
        for (unsigned i = 0; i < d.k; ++i)
            sc.a[i] = (sc.alpha[i] - shift) * fac;
    }
    if (d.l >= 1) {
        const double fac = std::sqrt(static_cast<double>(d.k + d.l) / d.l);
        const double shift = sc.alpha_sum / d.l;
        sc.b.resize(d.l);
        for (unsigned j = 0; j < d.l; ++j)
            sc.b[j] = (sc.beta[j] + shift) * fac;
    }
    return sc;
}

double single_f_hook_estimate(const HookDecomposition& d,
                              const ScaledCoordinates& coords,
                              std::uint64_t n) {
    if (d.k < 1 || d.l < 1)
        throw DomainError("single_f_hook_estimate needs k, l >= 1");
    if (n < 1) throw DomainError("n must be >= 1");
    const CTheta ct = c_theta(d.k, d.l);
    const double log_d =
        log_vandermonde(coords.alpha) + log_vandermonde(coords.beta);
    const double ssq = sum_squares(coords.alpha) + sum_squares(coords.beta);
    return ct.log_c + log_d - 0.5 * (d.k + d.l) * ssq -
           ct.theta * std::log(static_cast<double>(n)) +
           static_cast<double>(n) * log_int(d.k + d.l);
}

double single_f_strip_estimate(unsigned k, std::span<const double> a_coords,
                               std::uint64_t n) {
    if (k < 1) throw DomainError("single_f_strip_estimate needs k >= 1");
    if (a_coords.size() != k)
        throw DomainError("expected exactly k scaled coordinates");
    if (n < 1) throw DomainError("n must be >= 1");
    const double log_d = log_vandermonde(a_coords);
    const double ssq = sum_squares(a_coords);
    const double npow =
        static_cast<double>(k - 1) * (k + 2) / 4.0;
    return detail::strip_gamma_log(k) + log_d - 0.5 * k * ssq -
           npow * std::log(static_cast<double>(n)) +
           static_cast<double>(n) * log_int(k);
}

}  // namespace hooksum
