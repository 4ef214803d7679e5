#ifndef SLINK_LAURENT_HPP
#define SLINK_LAURENT_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace slink {

/// Laurent polynomial in q with exact integer coefficients.
/// Zero coefficients are never stored.
class Laurent {
public:
    Laurent() = default;

    static Laurent zero() { return Laurent{}; }
    static Laurent one() { return monomial(1, 0); }

    static Laurent monomial(std::int64_t coeff, int exp) {
        Laurent p;
        if (coeff != 0) p.terms_[exp] = coeff;
        return p;
    }

    /// q^{n-1} + q^{n-3} + ... + q^{1-n}
    static Laurent quantum_integer(int n) {
        Laurent p;
        for (int e = 1 - n; e <= n - 1; e += 2) p.terms_[e] = 1;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    std::int64_t coeff(int exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? 0 : it->second;
    }

    const std::map<int, std::int64_t>& terms() const { return terms_; }

    void add_term(int exp, std::int64_t c) {
        if (c == 0) return;
        auto it = terms_.find(exp);
        if (it == terms_.end()) {
            terms_[exp] = c;
        } else {
            std::int64_t s;
            if (__builtin_add_overflow(it->second, c, &s))
                throw std::overflow_error("Laurent: coefficient overflow");
            if (s == 0)
                terms_.erase(it);
            else
                it->second = s;
        }
    }

    Laurent& operator+=(const Laurent& o) {
        for (auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent p;
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_) {
                std::int64_t m;
                if (__builtin_mul_overflow(ca, cb, &m))
                    throw std::overflow_error("Laurent: coefficient overflow");
                p.add_term(ea + eb, m);
            }
        return p;
    }

    Laurent operator-() const {
        Laurent p;
        for (auto& [e, c] : terms_) p.terms_[e] = -c;
        return p;
    }

    /// Multiply by q^k.
    Laurent shifted(int k) const {
        Laurent p;
        for (auto& [e, c] : terms_) p.terms_[e + k] = c;
        return p;
    }

    std::int64_t eval_at_one() const {
        std::int64_t s = 0;
        for (auto& [e, c] : terms_) s += c;
        return s;
    }

    /// Coefficientwise q -> q^{-1}.
    Laurent mirrored() const {
        Laurent p;
        for (auto& [e, c] : terms_) p.terms_[-e] = c;
        return p;
    }

    bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const Laurent& o) const { return terms_ != o.terms_; }

    /// Canonical serialization: "1 q^-1 + 1 q^1", zero prints as "0".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto& [e, c] : terms_) {
            std::int64_t a = c;
            if (first) {
                if (a < 0) {
                    s += "-";
                    a = -a;
                }
            } else {
                s += (a < 0) ? " - " : " + ";
                if (a < 0) a = -a;
            }
            s += std::to_string(a) + " q^" + std::to_string(e);
            first = false;
        }
        return s;
    }

private:
    std::map<int, std::int64_t> terms_;
};

}  // namespace slink

#endif
