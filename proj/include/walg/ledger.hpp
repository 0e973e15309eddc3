#pragma once

// Denominator ledger: primes inverted during a computation, with the step that
// first needed each one.

#include "walg/rational.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace walg {

class DenominatorLedger {
public:
    void add_prime(const Integer &p, const std::string &step) {
        auto &steps = primes_[p];
        if (std::find(steps.begin(), steps.end(), step) == steps.end()) steps.push_back(step);
    }

    void add_integer(const Integer &n, const std::string &step) {
        if (abs(n) <= 1) return;
        for (const auto &p : prime_support(n)) add_prime(p, step);
    }

    /// Records the primes of q's denominator.
    void add_denominator(const Rational &q, const std::string &step) { add_integer(q.get_den(), step); }

    template <class Range> void add_denominators(const Range &values, const std::string &step) {
        Integer l = 1;
        for (const Rational &q : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
        add_integer(l, step);
    }

    void merge(const DenominatorLedger &other) {
        for (const auto &[p, steps] : other.primes_)
            for (const auto &s : steps) add_prime(p, s);
    }

    std::set<Integer> primes() const {
        std::set<Integer> out;
        for (const auto &[p, s] : primes_) out.insert(p);
        return out;
    }

    Integer d() const {
        Integer out = 1;
        for (const auto &[p, s] : primes_) out *= p;
        return out;
    }

    const std::map<Integer, std::vector<std::string>> &provenance() const { return primes_; }

private:
    std::map<Integer, std::vector<std::string>> primes_;
};

/// Bad primes of a simple Lie algebra.
inline std::vector<long> bad_primes(char type, int rank) {
    switch (type) {
    case 'A': return {};
    case 'B':
    case 'C':
    case 'D': return {2};
    case 'G':
    case 'F': return {2, 3};
    case 'E': return rank == 8 ? std::vector<long>{2, 3, 5} : std::vector<long>{2, 3};
    }
    return {};
}

} // namespace walg
