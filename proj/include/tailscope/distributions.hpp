#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "tailscope/errors.hpp"
#include "tailscope/rng.hpp"

namespace tailscope {

// ---------------------------------------------------------------------------
// Model families
// ---------------------------------------------------------------------------

struct Gaussian {
    double mean = 0.0;
    double sigma = 1.0;
};

// Double-exponential law centered at 0; the exponential-tail base for the
// put-tail-down gain condition.
struct Laplace {
    double scale = 1.0;
};

// Strictly stable, symmetric (skew 0), scale 1, location 0. alpha in (0,2].
// Closed-form cdf/pdf exist only for alpha == 1 (Cauchy) and alpha == 2
// (Gaussian with variance 2); other alphas sample fine but cdf/pdf throw
// unsupported_error.
struct SymmetricStable {
    double alpha = 2.0;
};

// F(x) = 1 - (xm/x)^alpha on [xm, inf).
struct Pareto {
    double alpha = 1.0;
    double xm = 1.0;
};

// X = 1/Z for Z ~ Pareto(alpha, 1):  F(x) = x^alpha on (0,1).
// alpha = 1 is Uniform(0,1).
struct ReciprocalPareto {
    double alpha = 1.0;
};

// Y symmetric about 0 with 1/|Y| ~ Pareto(alpha, 1); support [-1,1].
struct SymmetricReciprocalPareto {
    double alpha = 1.0;
};

class DistributionModel;

// Mixture (1-p)*F_base + p*delta_0: keeps a proportional tail but moves
// mass p into the origin, shrinking the variance to (1-p)*sigma^2.
struct PutTailDown {
    std::shared_ptr<const DistributionModel> base;
    double p = 0.5;
};

// Discrete law attaining equality in the k-sigma tail bound 1/k^2:
// atoms at -k*sigma and k*sigma with mass 1/(2k^2) each, the rest at 0.
struct ThreePointExtremal {
    double sigma = 1.0;
    double k = 3.0;
};

// ---------------------------------------------------------------------------
// DistributionModel: immutable tagged union over the families above.
// All free functions below are pure; models are safe to share across threads.
// ---------------------------------------------------------------------------

class DistributionModel {
public:
    using Variant = std::variant<Gaussian, Laplace, SymmetricStable, Pareto, ReciprocalPareto,
                                 SymmetricReciprocalPareto, PutTailDown, ThreePointExtremal>;

    template <typename T>
        requires(!std::is_same_v<std::decay_t<T>, DistributionModel> &&
                 std::is_constructible_v<Variant, T&&>)
    DistributionModel(T&& alternative) : v_(std::forward<T>(alternative)) {
        validate();
    }

    const Variant& variant() const { return v_; }

    template <typename T>
    const T* get_if() const {
        return std::get_if<T>(&v_);
    }

private:
    void validate() const; // throws parameter_error
    Variant v_;
};

struct Interval {
    double lo;
    double hi;
};

// --- evaluation -------------------------------------------------------------

// Right-continuous cdf P{X <= x}.
double cdf(const DistributionModel& m, double x);
// Left limit P{X < x}; differs from cdf only at atoms.
double cdf_left(const DistributionModel& m, double x);
// P{X > x}, evaluated without cancellation in the far tail.
double upper_tail(const DistributionModel& m, double x);
// Density. Throws atomic_point_error at an atom; returns 0 outside the support.
double pdf(const DistributionModel& m, double x);

double mean(const DistributionModel& m);     // throws parameter_error if undefined
double variance(const DistributionModel& m); // throws parameter_error if infinite
double stddev(const DistributionModel& m);

bool is_symmetric(const DistributionModel& m); // about 0
bool has_finite_variance(const DistributionModel& m);
// True when the law is purely continuous and cdf/pdf have implemented forms.
bool has_evaluable_density(const DistributionModel& m);

Interval support(const DistributionModel& m);
Interval abs_support(const DistributionModel& m); // support of |X|

// Tail exponent a with P{|X| > x} ~ c x^-a, when the family declares one.
std::optional<double> tail_index_at_infinity(const DistributionModel& m);
// Index a such that the density of |X| varies regularly with exponent a-1
// at 0+, when declared.
std::optional<double> tail_index_at_zero(const DistributionModel& m);

// Compact comma-free descriptor, e.g. "pareto:alpha=1.5;xm=1".
std::string describe(const DistributionModel& m);

// --- sampling ---------------------------------------------------------------

struct SampleBatch {
    std::vector<double> values;
    DistributionModel model;
    std::uint64_t master_seed = 0;
    std::uint64_t replicate_index = 0;
};

double sample_one(const DistributionModel& m, RngStream& rng);
void sample_into(const DistributionModel& m, std::span<double> out, RngStream& rng);
SampleBatch sample(const DistributionModel& m, std::size_t n, std::uint64_t master_seed,
                   std::uint64_t replicate_index = 0);

// --- constructive procedures -------------------------------------------------

// Mixture construction; base must be symmetric with finite variance.
DistributionModel put_tail_down(const DistributionModel& base, double p);

// P{|Y_p| > k*sigma_p} = 2(1-p)(1 - F(k*sqrt(1-p)*sigma)) for the
// transformed law, with sigma the base's standard deviation.
double ptd_tail_probability(const DistributionModel& base, double p, double k);

// True when (1-p)(1 - F(k*sqrt(1-p)*sigma)) > 1 - F(k*sigma): the
// transformed law exceeds the base's k-sigma tail, i.e. it has more
// first-kind outliers at threshold k.
bool ptd_outlier_gain_condition(const DistributionModel& base, double p, double k);

// Upper bound 1/k^2 for P{|X| >= k*sigma} over all mean-0 variance-sigma^2
// laws, k > 1.
double selberg_bound(double k);

// The discrete law attaining selberg_bound exactly.
DistributionModel extremal_three_point(double sigma, double k);

struct ReciprocalParetoStats {
    double variance;   // alpha/(2+alpha)
    double tail3sigma; // P{|Y| >= 3*sigma} = 1 - 3^alpha (alpha/(2+alpha))^(alpha/2)
};
ReciprocalParetoStats reciprocal_pareto_stats(double alpha);

} // namespace tailscope
