#pragma once

namespace triea {

/// Size rewards (w_*) and novelty rewards (wd_*) of the fitness function.
struct QualityWeights {
    double w_gene = 0.1;
    double w_condition = 0.1;
    double w_time = 0.1;
    double wd_gene = 0.1;
    double wd_condition = 0.1;
    double wd_time = 0.1;

    /// Throws std::invalid_argument unless every weight is finite and >= 0.
    void validate() const;

    static QualityWeights zero() { return {0.0, 0.0, 0.0, 0.0, 0.0, 0.0}; }
};

/// Components of one candidate's fitness. Lower `f` is better.
struct FitnessBreakdown {
    double msr = 0.0;
    double lsl = 0.0;
    double weights = 0.0;
    double distinction = 0.0;
    double f = 0.0;

    /// f = msr + lsl - weights - distinction, evaluated left to right.
    static FitnessBreakdown compose(double msr, double lsl, double weights, double distinction) {
        return {msr, lsl, weights, distinction, msr + lsl - weights - distinction};
    }

    friend bool operator==(const FitnessBreakdown&, const FitnessBreakdown&) = default;
};

}  // namespace triea
