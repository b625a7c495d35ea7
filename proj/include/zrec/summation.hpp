#pragma once

#include <complex>
#include <span>

namespace zrec {

/// Neumaier-compensated accumulator.  Accumulation order is fixed by the
/// caller, so results are bit-identical run to run.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class CompensatedComplexSum {
public:
    void add(std::complex<double> z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    std::complex<double> value() const { return {re_.value(), im_.value()}; }

private:
    CompensatedSum re_;
    CompensatedSum im_;
};

/// Error-compensated sum of an ordered sequence.  The reduction order is the
/// sequence order; shuffle invariance is not promised, determinism is.
inline double compensated_sum(std::span<const double> terms) {
    CompensatedSum acc;
    for (double x : terms) acc.add(x);
    return acc.value();
}

} // namespace zrec
