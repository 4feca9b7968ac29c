/*
 * ncpoly.hpp
 * ----------
 * Elements of the free unital noncommutative algebra over a coefficient
 * ring R (Z2 or LaurentZ): finitely supported maps word -> coefficient.
 * All operations return normalized values (no zero coefficients stored);
 * iteration follows the degree-lexicographic monomial order.
 */
#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "platdga/ring.hpp"
#include "platdga/word.hpp"

namespace platdga {

template <class R>
class NCPoly {
  public:
    using TermMap = std::map<Word, R, DegLexLess>;

    NCPoly() = default;

    static NCPoly zero() { return NCPoly{}; }
    static NCPoly unit() { return from_term(unit_word(), R::one()); }
    static NCPoly gen(GenId g) { return from_term(Word{g}, R::one()); }
    static NCPoly from_word(const Word& w) { return from_term(w, R::one()); }
    static NCPoly from_term(const Word& w, const R& c) {
        NCPoly p;
        if (!c.is_zero()) p.terms_[w] = c;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_unit() const {
        return terms_.size() == 1 && terms_.begin()->first.empty() &&
               terms_.begin()->second.is_one();
    }
    std::size_t term_count() const { return terms_.size(); }

    // Greatest word under deglex; polynomial must be nonzero.
    const Word& leading_word() const {
        if (terms_.empty()) throw std::logic_error("leading_word of zero polynomial");
        return terms_.rbegin()->first;
    }
    const R& leading_coeff() const {
        if (terms_.empty()) throw std::logic_error("leading_coeff of zero polynomial");
        return terms_.rbegin()->second;
    }

    void add_term(const Word& w, const R& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_[w] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    NCPoly operator+(const NCPoly& o) const {
        NCPoly r = *this;
        for (auto& [w, c] : o.terms_) r.add_term(w, c);
        return r;
    }
    NCPoly& operator+=(const NCPoly& o) {
        for (auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    NCPoly operator-() const {
        NCPoly r;
        for (auto& [w, c] : terms_) r.terms_[w] = -c;
        return r;
    }
    NCPoly operator-(const NCPoly& o) const { return *this + (-o); }

    NCPoly operator*(const NCPoly& o) const {
        NCPoly r;
        for (auto& [w1, c1] : terms_)
            for (auto& [w2, c2] : o.terms_) r.add_term(concat(w1, w2), c1 * c2);
        return r;
    }

    NCPoly scaled(const R& c) const {
        NCPoly r;
        for (auto& [w, k] : terms_) r.add_term(w, k * c);
        return r;
    }

    bool operator==(const NCPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const NCPoly& o) const { return !(*this == o); }

    std::size_t max_degree() const {
        return terms_.empty() ? 0 : terms_.rbegin()->first.size();
    }

    // Unital ring homomorphism determined by images of the generators.
    // Throws if a generator occurring in the polynomial has no image.
    NCPoly substitute(const std::function<const NCPoly*(GenId)>& image) const {
        NCPoly r;
        for (auto& [w, c] : terms_) {
            NCPoly prod = from_term(unit_word(), c);
            for (GenId g : w) {
                const NCPoly* img = image(g);
                if (!img)
                    throw std::invalid_argument("substitution missing generator " +
                                                default_gen_name(g));
                prod = prod * (*img);
            }
            r += prod;
        }
        return r;
    }

    // Canonical rendering, leading term first.
    std::string str(const std::function<std::string(GenId)>& name = default_gen_name) const;

  private:
    TermMap terms_;
};

namespace detail {
inline std::string render_word(const Word& w,
                               const std::function<std::string(GenId)>& name) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += " ";
        out += name(w[i]);
    }
    return out;
}
}  // namespace detail

template <>
inline std::string NCPoly<Z2>::str(const std::function<std::string(GenId)>& name) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += it->first.empty() ? "1" : detail::render_word(it->first, name);
    }
    return out;
}

template <>
inline std::string NCPoly<LaurentZ>::str(const std::function<std::string(GenId)>& name) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Word& w = it->first;
        const LaurentZ& c = it->second;
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (out.empty()) {
            if (neg) { out += "-"; cs = cs.substr(1); }
        } else {
            out += neg ? " - " : " + ";
            if (neg) cs = cs.substr(1);
        }
        if (w.empty()) {
            out += cs;
        } else if (cs == "1") {
            out += detail::render_word(w, name);
        } else {
            if (c.needs_parens()) cs = "(" + cs + ")";
            out += cs + " " + detail::render_word(w, name);
        }
    }
    return out;
}

// t = 1 evaluation and mod-2 reduction of a Laurent polynomial element.
inline NCPoly<Z2> reduce_t1_mod2(const NCPoly<LaurentZ>& p) {
    NCPoly<Z2> r;
    for (auto& [w, c] : p.terms()) r.add_term(w, c.at_t1_mod2());
    return r;
}

}  // namespace platdga
