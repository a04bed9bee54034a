#pragma once

#include <array>
#include <map>
#include <string>

#include "wslab/rational.hpp"

namespace wslab {

/* The fixed variable set. Every polynomial in the library lives in Q[c, h, d]:
 * c — the Casimir parameter, h — the gl(1|1) weight parameter, d — the
 * dimension variable of the sl2 irreducible representation. */
enum class Var : int { c = 0, h = 1, d = 2 };

inline constexpr std::array<const char*, 3> kVarNames{"c", "h", "d"};

/* Exponent triple (c, h, d). */
using Monomial = std::array<int, 3>;

/* Term order used everywhere (iteration, printing, JSON): graded
 * lexicographic, highest first. */
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int ta = a[0] + a[1] + a[2], tb = b[0] + b[1] + b[2];
        if (ta != tb) return ta > tb;
        return a > b;  // lexicographic on (c,h,d) exponents, descending
    }
};

/* Sparse exact-rational polynomial in (c, h, d). Immutable value semantics;
 * all operations produce new values. Zero coefficients are never stored. */
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    Polynomial() = default;  // zero
    explicit Polynomial(const Rational& k);
    explicit Polynomial(long k);

    static Polynomial variable(Var v, int exponent = 1);
    static Polynomial term(const Rational& coeff, int ec, int eh, int ed);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /* The coefficient of the constant monomial (0 if absent). */
    Rational constant_term() const;
    /* The value of a constant polynomial; throws std::domain_error otherwise. */
    Rational constant_value() const;

    /* Degree in one variable; -1 for the zero polynomial. */
    int degree(Var v) const;
    int total_degree() const;

    /* Coefficient of v^k, as a polynomial in the remaining variables. */
    Polynomial coefficient(Var v, int k) const;
    /* Substitute a polynomial for a variable. */
    Polynomial substitute(Var v, const Polynomial& value) const;
    Polynomial pow(unsigned e) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Rational& k);
    friend Polynomial operator*(Polynomial a, const Rational& k) { return a *= k; }
    friend Polynomial operator*(const Rational& k, Polynomial a) { return a *= k; }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

    const TermMap& terms() const { return terms_; }

    /* Human-readable form, e.g. "c^3 - 6*c^2 + 8*c", "-1/2*c*h^2 + 1", "0". */
    std::string str() const;

    /* Canonical JSON: {"vars":["c","h","d"],"terms":[{"exp":[..],"num":..,"den":..},..]}
     * with terms in the canonical order and bigint coefficients as decimal strings. */
    std::string to_json() const;
    static Polynomial from_json(const std::string& text);

  private:
    void insert(const Monomial& m, const Rational& coeff);
    TermMap terms_;
};

}  // namespace wslab
