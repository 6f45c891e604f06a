#pragma once

#include <map>
#include <string>

namespace strata {

// Formal variable of a degeneration monomial: one parameter t_i per level
// below the top, one parameter h_e per horizontal edge. Level variables sort
// before edge variables, higher levels first, so printing is canonical.
struct MonomialVar {
    enum class Kind { Level, Edge };

    Kind kind;
    long level = 0;    // meaningful when kind == Level
    std::string edge;  // meaningful when kind == Edge

    static MonomialVar level_var(long i) { return MonomialVar{Kind::Level, i, {}}; }
    static MonomialVar edge_var(std::string e) {
        return MonomialVar{Kind::Edge, 0, std::move(e)};
    }

    friend bool operator<(const MonomialVar& a, const MonomialVar& b) {
        if (a.kind != b.kind) return a.kind == Kind::Level;
        if (a.kind == Kind::Level) return a.level > b.level;
        return a.edge < b.edge;
    }
    friend bool operator==(const MonomialVar& a, const MonomialVar& b) {
        return a.kind == b.kind && a.level == b.level && a.edge == b.edge;
    }
};

class Monomial {
public:
    Monomial() = default;

    static Monomial var(MonomialVar v, long exponent = 1) {
        Monomial m;
        if (exponent != 0) m.exp_[std::move(v)] = exponent;
        return m;
    }

    bool is_unit() const { return exp_.empty(); }

    Monomial& operator*=(const Monomial& o) {
        for (const auto& [v, e] : o.exp_) {
            long& slot = exp_[v];
            slot += e;
            if (slot == 0) exp_.erase(v);
        }
        return *this;
    }
    friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

    Monomial pow(long k) const {
        Monomial m;
        if (k == 0) return m;
        for (const auto& [v, e] : exp_) m.exp_[v] = e * k;
        return m;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exp_ == b.exp_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    std::string str() const {
        if (exp_.empty()) return "1";
        std::string out;
        for (const auto& [v, e] : exp_) {
            if (!out.empty()) out += "*";
            if (v.kind == MonomialVar::Kind::Level)
                out += "t_" + std::to_string(v.level);
            else
                out += "h_" + v.edge;
            if (e != 1) out += "^" + std::to_string(e);
        }
        return out;
    }

private:
    std::map<MonomialVar, long> exp_;
};

} // namespace strata
