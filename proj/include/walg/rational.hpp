#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace walg {

using Rational = mpq_class;
using Integer = mpz_class;

/// Thrown when user input (type, labels, orbit names) cannot be processed.
struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when an internal consistency check fails. Carries the module name.
struct InvariantFailure : std::runtime_error {
    InvariantFailure(std::string module, const std::string &what)
        : std::runtime_error(module + ": " + what), module_(std::move(module)) {}
    const std::string &module() const { return module_; }

private:
    std::string module_;
};

/// Thrown by the polynomial solver when configured bounds are exceeded.
struct Undecided : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require(bool cond, const char *module, const std::string &what) {
    if (!cond) throw InvariantFailure(module, what);
}

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational &q) { return q.get_den() == 1; }

inline std::string to_string(const Rational &q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Prime factorisation by trial division followed by Pollard rho for the
/// cofactor. Denominators met in practice are tiny; the fallback exists so a
/// large cofactor never stalls the ledger.
inline std::map<Integer, unsigned> factorize(Integer n) {
    std::map<Integer, unsigned> out;
    if (n < 0) n = -n;
    if (n <= 1) return out;
    for (unsigned long p = 2; p < 10000 && n > 1; ++p) {
        if (p * p > n) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[Integer(p)];
            n /= p;
        }
    }
    std::vector<Integer> stack{n};
    while (!stack.empty()) {
        Integer m = stack.back();
        stack.pop_back();
        if (m == 1) continue;
        if (mpz_probab_prime_p(m.get_mpz_t(), 30)) {
            ++out[m];
            continue;
        }
        // Pollard rho with Floyd cycle detection.
        Integer d = 1;
        for (unsigned long c = 1; d == 1 || d == m; ++c) {
            Integer x = 2, y = 2;
            d = 1;
            while (d == 1) {
                x = (x * x + c) % m;
                y = (y * y + c) % m;
                y = (y * y + c) % m;
                Integer diff = x - y;
                if (diff < 0) diff = -diff;
                mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), m.get_mpz_t());
            }
        }
        stack.push_back(d);
        stack.push_back(m / d);
    }
    return out;
}

inline std::vector<Integer> prime_support(const Integer &n) {
    std::vector<Integer> out;
    for (const auto &[p, e] : factorize(n)) out.push_back(p);
    return out;
}

} // namespace walg
