#include "acs/form.hpp"

#include <algorithm>

#include "acs/errors.hpp"

namespace acs {

std::pair<int, int> FormMonomial::bidegree() const {
    int p = 0, q = 0;
    for (auto g : gens) (g.barred ? q : p)++;
    return {p, q};
}

bool FormMonomial::operator<(const FormMonomial& o) const {
    if (gens.size() != o.gens.size()) return gens.size() < o.gens.size();
    return gens < o.gens;
}

std::optional<int> sort_with_sign(std::vector<GeneratorIndex>& gens) {
    // Insertion sort, counting transpositions; fine at these sizes.
    int sign = 1;
    for (std::size_t i = 1; i < gens.size(); ++i) {
        GeneratorIndex g = gens[i];
        std::size_t j = i;
        while (j > 0 && g < gens[j - 1]) {
            gens[j] = gens[j - 1];
            --j;
            sign = -sign;
        }
        gens[j] = g;
    }
    for (std::size_t i = 1; i < gens.size(); ++i)
        if (gens[i] == gens[i - 1]) return std::nullopt;
    return sign;
}

std::string generator_str(GeneratorIndex g, const GeneratorLetters& letters) {
    return (g.barred ? letters.barred : letters.unbarred) + std::to_string(g.index);
}

Form Form::scalar(int m, const Coeff& c) {
    Form f(m);
    f.add_term(FormMonomial{}, c);
    return f;
}

Form Form::generator(int m, GeneratorIndex g) {
    Form f(m);
    f.add_term(FormMonomial{{g}}, Coeff(1));
    return f;
}

Form Form::monomial(int m, std::vector<GeneratorIndex> gens, const Coeff& c) {
    auto sign = sort_with_sign(gens);
    Form f(m);
    if (!sign) return f;
    f.add_term(FormMonomial{std::move(gens)}, *sign == 1 ? c : -c);
    return f;
}

Form Form::top_unbarred(int m) {
    std::vector<GeneratorIndex> gens;
    for (int j = 1; j <= m; ++j) gens.push_back(gen(j));
    return monomial(m, std::move(gens));
}

Form Form::top_unbarred_omitting(int m, int j) {
    std::vector<GeneratorIndex> gens;
    for (int q = 1; q <= m; ++q)
        if (q != j) gens.push_back(gen(q));
    return monomial(m, std::move(gens));
}

std::optional<int> Form::homogeneous_degree() const {
    std::optional<int> deg;
    for (const auto& [mono, c] : terms_) {
        if (deg && *deg != mono.degree()) return std::nullopt;
        deg = mono.degree();
    }
    return deg;
}

Coeff Form::coefficient(const FormMonomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Coeff() : it->second;
}

void Form::add_term(FormMonomial mono, const Coeff& c) {
    if (c.is_zero()) return;
    for (auto g : mono.gens)
        if (g.index < 1 || g.index > m_)
            throw DimMismatch("generator index " + std::to_string(g.index) +
                              " outside ambient dimension m=" + std::to_string(m_));
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(std::move(mono), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Form Form::operator-() const {
    Form r(m_);
    for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, -c);
    return r;
}

Form& Form::operator+=(const Form& o) {
    if (m_ != o.m_) throw DimMismatch("adding forms over different ambient dimensions");
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
}

Form& Form::operator-=(const Form& o) {
    if (m_ != o.m_) throw DimMismatch("subtracting forms over different ambient dimensions");
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
}

Form Form::scaled(const Coeff& c) const {
    Form r(m_);
    for (const auto& [mono, k] : terms_) r.add_term(mono, c * k);
    return r;
}

Form Form::conj() const {
    Form r(m_);
    for (const auto& [mono, c] : terms_) {
        std::vector<GeneratorIndex> gens;
        gens.reserve(mono.gens.size());
        for (auto g : mono.gens) gens.push_back(g.conj());
        auto sign = sort_with_sign(gens);
        // Distinct generators stay distinct under conjugation.
        Coeff cc = c.conj();
        r.add_term(FormMonomial{std::move(gens)}, *sign == 1 ? cc : -cc);
    }
    return r;
}

Form Form::project(int p, int q) const {
    Form r(m_);
    for (const auto& [mono, c] : terms_)
        if (mono.bidegree() == std::make_pair(p, q)) r.add_term(mono, c);
    return r;
}

Form Form::substitute_generators(
    const std::function<const Form&(GeneratorIndex)>& image) const {
    std::optional<Form> result;
    for (const auto& [mono, c] : terms_) {
        std::optional<Form> prod;
        for (auto g : mono.gens) {
            const Form& img = image(g);
            prod = prod ? wedge(*prod, img) : img;
        }
        Form term = prod ? prod->scaled(c)
                         : Form::scalar(result ? result->ambient() : m_, c);
        if (!result)
            result = term;
        else
            *result += term;
    }
    return result ? *result : Form(m_);
}

Form wedge(const Form& a, const Form& b) {
    if (a.ambient() != b.ambient())
        throw DimMismatch("wedge of forms over different ambient dimensions");
    Form r(a.ambient());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            std::vector<GeneratorIndex> gens;
            gens.reserve(ma.gens.size() + mb.gens.size());
            gens.insert(gens.end(), ma.gens.begin(), ma.gens.end());
            gens.insert(gens.end(), mb.gens.begin(), mb.gens.end());
            auto sign = sort_with_sign(gens);
            if (!sign) continue;
            Coeff c = ca * cb;
            r.add_term(FormMonomial{std::move(gens)}, *sign == 1 ? c : -c);
        }
    }
    return r;
}

Form coefficient_differential(int m, const Coeff& c, FrameTag frame) {
    Form df(m);
    for (int p = 1; p <= m; ++p) {
        for (bool barred : {false, true}) {
            GeneratorIndex dir{p, barred};
            Coeff dc = c.differentiate(dir, frame);
            if (!dc.is_zero()) df.add_term(FormMonomial{{dir}}, dc);
        }
    }
    return df;
}

Coeff evaluate_two_form(const Form& f, GeneratorIndex x, GeneratorIndex y) {
    Coeff value;
    for (const auto& [mono, c] : f.terms()) {
        if (mono.degree() != 2)
            throw InternalInconsistency("evaluate_two_form on a non-2-form term");
        GeneratorIndex g1 = mono.gens[0], g2 = mono.gens[1];
        if (g1 == x && g2 == y) value += c;
        if (g1 == y && g2 == x) value -= c;
    }
    return value;
}

std::string Form::str(const GeneratorLetters& letters) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        std::string gens;
        for (std::size_t i = 0; i < mono.gens.size(); ++i) {
            if (i) gens += "^";
            gens += generator_str(mono.gens[i], letters);
        }
        std::string piece;
        if (mono.gens.empty()) {
            piece = c.str();
            if (c.terms().size() > 1) piece = "(" + piece + ")";
        } else {
            piece = c.str_factor() + gens;
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

} // namespace acs
