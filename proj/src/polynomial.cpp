#include "wslab/polynomial.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace wslab {

Polynomial::Polynomial(const Rational& k) {
    insert({0, 0, 0}, k);
}

Polynomial::Polynomial(long k) : Polynomial(Rational(k)) {}

Polynomial Polynomial::variable(Var v, int exponent) {
    if (exponent < 0) throw std::invalid_argument("polynomial: negative exponent");
    Polynomial p;
    Monomial m{0, 0, 0};
    m[static_cast<int>(v)] = exponent;
    p.insert(m, Rational(1));
    return p;
}

Polynomial Polynomial::term(const Rational& coeff, int ec, int eh, int ed) {
    if (ec < 0 || eh < 0 || ed < 0)
        throw std::invalid_argument("polynomial: negative exponent");
    Polynomial p;
    p.insert({ec, eh, ed}, coeff);
    return p;
}

void Polynomial::insert(const Monomial& m, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, fresh] = terms_.emplace(m, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

bool Polynomial::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0, 0});
}

Rational Polynomial::constant_term() const {
    auto it = terms_.find({0, 0, 0});
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_value() const {
    if (!is_constant()) throw std::domain_error("polynomial: not constant: " + str());
    return constant_term();
}

int Polynomial::degree(Var v) const {
    int deg = -1;
    for (const auto& [m, q] : terms_) deg = std::max(deg, m[static_cast<int>(v)]);
    return deg;
}

int Polynomial::total_degree() const {
    int deg = -1;
    for (const auto& [m, q] : terms_) deg = std::max(deg, m[0] + m[1] + m[2]);
    return deg;
}

Polynomial Polynomial::coefficient(Var v, int k) const {
    const int vi = static_cast<int>(v);
    Polynomial out;
    for (const auto& [m, q] : terms_) {
        if (m[vi] != k) continue;
        Monomial rest = m;
        rest[vi] = 0;
        out.insert(rest, q);
    }
    return out;
}

Polynomial Polynomial::substitute(Var v, const Polynomial& value) const {
    const int vi = static_cast<int>(v);
    Polynomial out;
    for (const auto& [m, q] : terms_) {
        Monomial rest = m;
        rest[vi] = 0;
        Polynomial piece = value.pow(static_cast<unsigned>(m[vi]));
        piece *= Polynomial::term(q, rest[0], rest[1], rest[2]);
        out += piece;
    }
    return out;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial out{Rational(1)};
    for (unsigned i = 0; i < e; ++i) out *= *this;
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [m, q] : out.terms_) q = -q;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, q] : o.terms_) insert(m, q);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, q] : o.terms_) insert(m, -q);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, qa] : a.terms_)
        for (const auto& [mb, qb] : b.terms_)
            out.insert({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, qa * qb);
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& k) {
    if (k == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, q] : terms_) q *= k;
    return *this;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, q] : terms_) {
        Rational a = q;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;

        std::string vars;
        for (int vi = 0; vi < 3; ++vi) {
            if (m[vi] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += kVarNames[vi];
            if (m[vi] > 1) vars += "^" + std::to_string(m[vi]);
        }
        if (vars.empty()) {
            os << to_string(a);
        } else if (a == 1) {
            os << vars;
        } else {
            os << to_string(a) << "*" << vars;
        }
    }
    return os.str();
}

std::string Polynomial::to_json() const {
    nlohmann::ordered_json j;
    j["vars"] = {"c", "h", "d"};
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [m, q] : terms_) {
        nlohmann::ordered_json t;
        t["exp"] = {m[0], m[1], m[2]};
        t["num"] = q.get_num().get_str();
        t["den"] = q.get_den().get_str();
        j["terms"].push_back(t);
    }
    return j.dump();
}

Polynomial Polynomial::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("polynomial JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
        throw std::invalid_argument("polynomial JSON: missing vars/terms");
    if (j["vars"] != nlohmann::json({"c", "h", "d"}))
        throw std::invalid_argument("polynomial JSON: unexpected variable set");
    Polynomial out;
    for (const auto& t : j["terms"]) {
        const auto& e = t.at("exp");
        if (!e.is_array() || e.size() != 3)
            throw std::invalid_argument("polynomial JSON: bad exponent triple");
        int ec = e[0].get<int>(), eh = e[1].get<int>(), ed = e[2].get<int>();
        if (ec < 0 || eh < 0 || ed < 0)
            throw std::invalid_argument("polynomial JSON: negative exponent");
        out.insert({ec, eh, ed},
                   make_rational(t.at("num").get<std::string>(),
                                 t.at("den").get<std::string>()));
    }
    return out;
}

}  // namespace wslab
