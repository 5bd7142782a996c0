#include "laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace dcover {

IntLaurentPoly::IntLaurentPoly(const BigInt& constant) {
    add_term(0, constant);
}

IntLaurentPoly IntLaurentPoly::monomial(const BigInt& coeff, int exp) {
    IntLaurentPoly p;
    p.add_term(exp, coeff);
    return p;
}

IntLaurentPoly IntLaurentPoly::from_terms(const std::vector<std::pair<int, BigInt>>& terms) {
    IntLaurentPoly p;
    for (const auto& [exp, c] : terms) p.add_term(exp, c);
    return p;
}

void IntLaurentPoly::add_term(int exp, const BigInt& c) {
    if (c == 0) return;
    auto it = coeffs_.find(exp);
    if (it == coeffs_.end()) {
        coeffs_.emplace(exp, c);
    } else {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

int IntLaurentPoly::degree() const {
    if (is_zero()) throw std::domain_error("degree of the zero polynomial");
    return coeffs_.rbegin()->first;
}

int IntLaurentPoly::min_exp() const {
    if (is_zero()) throw std::domain_error("min_exp of the zero polynomial");
    return coeffs_.begin()->first;
}

BigInt IntLaurentPoly::coeff(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? BigInt(0) : it->second;
}

BigInt IntLaurentPoly::eval(const BigInt& x) const {
    if (is_zero()) return 0;
    if (min_exp() < 0)
        throw std::domain_error("eval requires nonnegative exponents; normalize first");
    BigInt acc = 0;
    for (const auto& [exp, c] : coeffs_)
        acc += c * boost::multiprecision::pow(x, static_cast<unsigned>(exp));
    return acc;
}

IntLaurentPoly IntLaurentPoly::normalized() const {
    if (is_zero()) return {};
    const int shift = min_exp();
    if (shift == 0) return *this;
    IntLaurentPoly p;
    for (const auto& [exp, c] : coeffs_) p.coeffs_.emplace(exp - shift, c);
    return p;
}

IntLaurentPoly IntLaurentPoly::operator-() const {
    IntLaurentPoly p;
    for (const auto& [exp, c] : coeffs_) p.coeffs_.emplace(exp, -c);
    return p;
}

IntLaurentPoly& IntLaurentPoly::operator+=(const IntLaurentPoly& rhs) {
    for (const auto& [exp, c] : rhs.coeffs_) add_term(exp, c);
    return *this;
}

IntLaurentPoly& IntLaurentPoly::operator-=(const IntLaurentPoly& rhs) {
    for (const auto& [exp, c] : rhs.coeffs_) add_term(exp, -c);
    return *this;
}

IntLaurentPoly operator*(const IntLaurentPoly& lhs, const IntLaurentPoly& rhs) {
    IntLaurentPoly p;
    for (const auto& [e1, c1] : lhs.coeffs_)
        for (const auto& [e2, c2] : rhs.coeffs_) p.add_term(e1 + e2, c1 * c2);
    return p;
}

IntLaurentPoly IntLaurentPoly::divide_exact(const IntLaurentPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (is_zero()) return {};

    // Reduce to ordinary polynomials; reinstate the Laurent shift at the end.
    const int shift = min_exp() - divisor.min_exp();
    std::map<int, BigInt> rem = normalized().coeffs_;
    const std::map<int, BigInt> div = divisor.normalized().coeffs_;
    const int div_deg = div.rbegin()->first;
    const BigInt& div_lc = div.rbegin()->second;

    IntLaurentPoly quotient;
    while (!rem.empty()) {
        const int rem_deg = rem.rbegin()->first;
        if (rem_deg < div_deg) throw std::domain_error("inexact polynomial division");
        const BigInt rem_lc = rem.rbegin()->second;
        if (rem_lc % div_lc != 0) throw std::domain_error("inexact polynomial division");
        const BigInt c = rem_lc / div_lc;
        const int e = rem_deg - div_deg;
        quotient.add_term(e + shift, c);
        for (const auto& [de, dc] : div) {
            auto it = rem.find(e + de);
            BigInt v = (it == rem.end() ? BigInt(0) : it->second) - c * dc;
            if (it != rem.end()) rem.erase(it);
            if (v != 0) rem.emplace(e + de, std::move(v));
        }
    }
    return quotient;
}

std::string IntLaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const int exp = it->first;
        const BigInt& c = it->second;
        const BigInt mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || exp == 0) os << mag.str();
        if (exp != 0) {
            os << 't';
            if (exp != 1) os << '^' << exp;
        }
    }
    return os.str();
}

}  // namespace dcover
