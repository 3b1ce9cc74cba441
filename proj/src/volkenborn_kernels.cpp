#include "qzeta/volkenborn_kernels.hpp"

#include "qzeta/errors.hpp"

#include <omp.h>

namespace qzeta {

namespace {

Integer modulus_of(const MomentJob& job) {
    Integer m;
    mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(job.p), static_cast<unsigned long>(job.work_precision));
    return m;
}

void validate(const MomentJob& job) {
    if (job.p < 2 || job.work_precision < 1 || job.count < 0 || job.max_moment < 0)
        throw DomainError("malformed moment job");
}

// Accumulates x in [lo, hi) into acc (unreduced).
void accumulate_block(const MomentJob& job, const Integer& modulus, std::int64_t lo, std::int64_t hi,
                      std::vector<Integer>& acc) {
    const std::size_t period = job.weights.size();
    mpz_class power, term;
    mpz_powm_ui(power.get_mpz_t(), job.base.get_mpz_t(), static_cast<unsigned long>(lo), modulus.get_mpz_t());
    for (std::int64_t x = lo; x < hi; ++x) {
        const int weight = period == 0 ? 1 : job.weights[static_cast<std::size_t>(x) % period];
        if (weight != 0) {
            term = power;
            for (int k = 0; k <= job.max_moment; ++k) {
                if (weight > 0)
                    mpz_add(acc[k].get_mpz_t(), acc[k].get_mpz_t(), term.get_mpz_t());
                else
                    mpz_sub(acc[k].get_mpz_t(), acc[k].get_mpz_t(), term.get_mpz_t());
                if (k < job.max_moment) {
                    mpz_mul_ui(term.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(x));
                    mpz_fdiv_r(term.get_mpz_t(), term.get_mpz_t(), modulus.get_mpz_t());
                }
            }
        }
        mpz_mul(power.get_mpz_t(), power.get_mpz_t(), job.base.get_mpz_t());
        mpz_fdiv_r(power.get_mpz_t(), power.get_mpz_t(), modulus.get_mpz_t());
    }
}

void reduce(std::vector<Integer>& acc, const Integer& modulus) {
    for (auto& a : acc)
        mpz_fdiv_r(a.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t());
}

} // namespace

std::vector<Integer> moment_sums_serial(const MomentJob& job) {
    validate(job);
    const Integer modulus = modulus_of(job);
    std::vector<Integer> acc(static_cast<std::size_t>(job.max_moment) + 1, Integer(0));
    mpz_class power = 1, term;
    const std::size_t period = job.weights.size();
    for (std::int64_t x = 0; x < job.count; ++x) {
        const int weight = period == 0 ? 1 : job.weights[static_cast<std::size_t>(x) % period];
        term = power;
        for (int k = 0; k <= job.max_moment; ++k) {
            acc[k] = (acc[k] + weight * term) % modulus;
            term = (term * x) % modulus;
        }
        power = (power * job.base) % modulus;
    }
    reduce(acc, modulus);
    return acc;
}

std::vector<Integer> moment_sums_parallel(const MomentJob& job) {
    validate(job);
    const Integer modulus = modulus_of(job);
    std::vector<Integer> total(static_cast<std::size_t>(job.max_moment) + 1, Integer(0));

#pragma omp parallel
    {
        const std::int64_t threads = omp_get_num_threads();
        const std::int64_t tid = omp_get_thread_num();
        const std::int64_t chunk = (job.count + threads - 1) / threads;
        const std::int64_t lo = std::min(job.count, tid * chunk);
        const std::int64_t hi = std::min(job.count, lo + chunk);
        std::vector<Integer> local(total.size(), Integer(0));
        if (lo < hi)
            accumulate_block(job, modulus, lo, hi, local);
        reduce(local, modulus);
#pragma omp critical(qzeta_moment_reduce)
        for (std::size_t k = 0; k < total.size(); ++k)
            total[k] += local[k];
    }
    reduce(total, modulus);
    return total;
}

} // namespace qzeta
