#pragma once

/// Finitely supported complex sequences c(n), n in Z, and their l_p,
/// nu-weighted and grand-sequence norms.

#include <complex>
#include <vector>

namespace eoslab {

struct SequenceData {
    std::vector<long> support;                  // distinct indices
    std::vector<std::complex<double>> values;   // value per index

    std::size_t size() const { return support.size(); }
    std::complex<double> at(long n) const;      // 0 off the support
};

SequenceData make_sequence(std::vector<long> support,
                           std::vector<std::complex<double>> values);

/// |c|_p = (sum |c(n)|^p)^(1/p), p >= 1.
double seq_lp(const SequenceData& c, double p);

/// |c|_p(nu) = (sum |c(n)|^p (|n|^(p-2) + 1))^(1/p), p >= 2.
/// The n = 0 term carries weight 1 (the |n|^(p-2) factor taken as 0).
double seq_lp_nu(const SequenceData& c, double p);

struct SeqNormReport {
    double value = 0.0;
    double argmax_p = 0.0;
    bool boundary_sup = false;  // sup attained at the grid edge
};

/// ||c||g(a, alpha) = sup_{p > a} |c|_p (p - a)^alpha, graded p-grid near a.
SeqNormReport seq_g_a_alpha(const SequenceData& c, double a, double alpha,
                            double p_max = 256.0);

/// ||c||g(psi, nu) = sup_{p >= 2} |c|_p(nu) / psi(p).
struct PsiFunction;
SeqNormReport seq_g_psi_nu(const SequenceData& c, const PsiFunction& psi,
                           double p_max = 256.0);

}  // namespace eoslab
