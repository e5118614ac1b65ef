#include "acs/coeff.hpp"

#include <algorithm>
#include <tuple>

#include "acs/errors.hpp"

namespace acs {

namespace {

std::string direction_str(GeneratorIndex g) {
    return (g.barred ? "c" : "") + std::to_string(g.index);
}

std::string frame_str(FrameTag t) { return t == FrameTag::Xi ? "xi" : "psi"; }

// (name, bar, is-deriv, frame tag, direction) as a comparable tuple.
auto atom_key(const Atom& a) {
    if (const auto* f = std::get_if<FuncSymbol>(&a))
        return std::make_tuple(f->name, f->conjugated, false, FrameTag::Xi, GeneratorIndex{});
    const auto& d = std::get<DerivSymbol>(a);
    return std::make_tuple(d.base.name, d.base.conjugated, true, d.frame, d.direction);
}

} // namespace

std::string DerivSymbol::str() const {
    return frame_str(frame) + "_" + direction_str(direction) + "(" + base.str() + ")";
}

bool atom_less(const Atom& a, const Atom& b) { return atom_key(a) < atom_key(b); }
bool atom_equal(const Atom& a, const Atom& b) { return atom_key(a) == atom_key(b); }

std::string atom_str(const Atom& a) {
    return std::visit([](const auto& x) { return x.str(); }, a);
}

Atom atom_conj(const Atom& a) {
    return std::visit([](const auto& x) -> Atom { return x.conj(); }, a);
}

CoeffMonomial CoeffMonomial::merged(const CoeffMonomial& o) const {
    CoeffMonomial r;
    r.atoms.reserve(atoms.size() + o.atoms.size());
    std::merge(atoms.begin(), atoms.end(), o.atoms.begin(), o.atoms.end(),
               std::back_inserter(r.atoms), atom_less);
    return r;
}

CoeffMonomial CoeffMonomial::conj() const {
    CoeffMonomial r;
    r.atoms.reserve(atoms.size());
    for (const auto& a : atoms) r.atoms.push_back(atom_conj(a));
    std::sort(r.atoms.begin(), r.atoms.end(), atom_less);
    return r;
}

bool CoeffMonomial::operator<(const CoeffMonomial& o) const {
    return std::lexicographical_compare(atoms.begin(), atoms.end(), o.atoms.begin(),
                                        o.atoms.end(), atom_less);
}

bool CoeffMonomial::operator==(const CoeffMonomial& o) const {
    return atoms.size() == o.atoms.size() &&
           std::equal(atoms.begin(), atoms.end(), o.atoms.begin(), atom_equal);
}

std::string CoeffMonomial::str() const {
    std::string s;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (i) s += "*";
        s += atom_str(atoms[i]);
    }
    return s;
}

Coeff::Coeff(const Scalar& s) {
    if (!s.is_zero()) terms_[CoeffMonomial::unit()] = s;
}

Coeff Coeff::symbol(const FuncSymbol& f) {
    Coeff c;
    c.terms_[CoeffMonomial{{Atom{f}}}] = Scalar(1);
    return c;
}

Coeff Coeff::deriv(const DerivSymbol& d) {
    Coeff c;
    c.terms_[CoeffMonomial{{Atom{d}}}] = Scalar(1);
    return c;
}

bool Coeff::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.is_unit();
}

Scalar Coeff::constant_value() const {
    if (terms_.empty()) return Scalar(0);
    if (!is_constant())
        throw InternalInconsistency("constant_value() on non-constant coefficient " + str());
    return terms_.begin()->second;
}

void Coeff::add_term(const CoeffMonomial& mono, const Scalar& s) {
    if (s.is_zero()) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, s);
    } else {
        it->second += s;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Coeff Coeff::operator-() const {
    Coeff r;
    for (const auto& [mono, s] : terms_) r.terms_.emplace(mono, -s);
    return r;
}

Coeff& Coeff::operator+=(const Coeff& o) {
    for (const auto& [mono, s] : o.terms_) add_term(mono, s);
    return *this;
}

Coeff& Coeff::operator-=(const Coeff& o) {
    for (const auto& [mono, s] : o.terms_) add_term(mono, -s);
    return *this;
}

Coeff Coeff::operator*(const Coeff& o) const {
    Coeff r;
    for (const auto& [ma, sa] : terms_)
        for (const auto& [mb, sb] : o.terms_) r.add_term(ma.merged(mb), sa * sb);
    return r;
}

Coeff Coeff::conj() const {
    Coeff r;
    for (const auto& [mono, s] : terms_) r.add_term(mono.conj(), s.conj());
    return r;
}

Coeff Coeff::substitute(const SubstitutionRules& rules) const {
    Coeff result;
    for (const auto& [mono, s] : terms_) {
        Coeff term(s);
        for (const auto& a : mono.atoms) {
            auto it = rules.find(a);
            if (it != rules.end()) {
                term = term * it->second;
            } else {
                Coeff kept;
                kept.terms_[CoeffMonomial{{a}}] = Scalar(1);
                term = term * kept;
            }
            if (term.is_zero()) break;
        }
        result += term;
    }
    return result;
}

Coeff Coeff::differentiate(GeneratorIndex direction, FrameTag frame) const {
    Coeff result;
    for (const auto& [mono, s] : terms_) {
        // Leibniz over the word: replace one atom at a time.
        for (std::size_t i = 0; i < mono.atoms.size(); ++i) {
            if (std::holds_alternative<DerivSymbol>(mono.atoms[i]))
                throw SecondDerivative("cannot differentiate " + atom_str(mono.atoms[i]) +
                                       ": only first derivatives exist in the calculus");
            const auto& f = std::get<FuncSymbol>(mono.atoms[i]);
            CoeffMonomial rest;
            rest.atoms.reserve(mono.atoms.size());
            for (std::size_t j = 0; j < mono.atoms.size(); ++j)
                if (j != i) rest.atoms.push_back(mono.atoms[j]);
            CoeffMonomial dmono =
                rest.merged(CoeffMonomial{{Atom{DerivSymbol{f, frame, direction}}}});
            result.add_term(dmono, s);
        }
    }
    return result;
}

bool Coeff::has_derivatives() const {
    for (const auto& [mono, s] : terms_)
        for (const auto& a : mono.atoms)
            if (std::holds_alternative<DerivSymbol>(a)) return true;
    return false;
}

std::string Coeff::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, s] : terms_) {
        std::string piece;
        if (mono.is_unit()) {
            piece = s.str();
        } else if (s.is_one()) {
            piece = mono.str();
        } else if ((-s).is_one()) {
            piece = "-" + mono.str();
        } else if (s.needs_parens()) {
            piece = "(" + s.str() + ")*" + mono.str();
        } else {
            piece = s.str() + "*" + mono.str();
        }
        if (first) {
            out = piece;
            first = false;
        } else if (!piece.empty() && piece[0] == '-') {
            out += " - " + piece.substr(1);
        } else {
            out += " + " + piece;
        }
    }
    return out;
}

std::string Coeff::str_factor() const {
    if (is_constant()) {
        Scalar v = constant_value();
        if (v.is_one()) return "";
        if ((-v).is_one()) return "-";
        if (v.needs_parens()) return "(" + v.str() + ")*";
        return v.str() + "*";
    }
    if (terms_.size() == 1) return str() + "*";
    return "(" + str() + ")*";
}

SubstitutionRules make_rules() { return SubstitutionRules(atom_less); }

} // namespace acs
