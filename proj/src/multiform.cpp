#include "syzygy/multiform.hpp"

#include <sstream>
#include <stdexcept>

#include "syzygy/binom.hpp"

namespace syzygy {

std::vector<Expo> monomial_basis(Ambient amb, Twist deg) {
    std::vector<Expo> out;
    if (amb == Ambient::P1xP1) {
        if (deg.m < 0 || deg.n < 0) return out;
        out.reserve((deg.m + 1) * (deg.n + 1));
        for (int i = 0; i <= deg.m; ++i)
            for (int j = 0; j <= deg.n; ++j)
                out.push_back({static_cast<int16_t>(deg.m - i), static_cast<int16_t>(i),
                               static_cast<int16_t>(deg.n - j), static_cast<int16_t>(j)});
    } else {
        int d = deg.m;
        if (d < 0) return out;
        out.reserve(static_cast<size_t>(binom(d + 2, 2)));
        for (int e0 = d; e0 >= 0; --e0)
            for (int e1 = d - e0; e1 >= 0; --e1)
                out.push_back({static_cast<int16_t>(e0), static_cast<int16_t>(e1),
                               static_cast<int16_t>(d - e0 - e1), 0});
    }
    return out;
}

size_t monomial_count(Ambient amb, Twist deg) {
    if (amb == Ambient::P1xP1)
        return (deg.m < 0 || deg.n < 0) ? 0 : static_cast<size_t>(deg.m + 1) * (deg.n + 1);
    return deg.m < 0 ? 0 : static_cast<size_t>(binom(deg.m + 2, 2));
}

MultiForm multiply(const FpField& F, const MultiForm& f, const MultiForm& g) {
    if (f.amb != g.amb) throw std::invalid_argument("multiply: ambient mismatch");
    MultiForm h;
    h.amb = f.amb;
    h.deg = f.deg + g.deg;
    for (auto& [ef, vf] : f.coeff)
        for (auto& [eg, vg] : g.coeff) {
            Expo e{static_cast<int16_t>(ef[0] + eg[0]), static_cast<int16_t>(ef[1] + eg[1]),
                   static_cast<int16_t>(ef[2] + eg[2]), static_cast<int16_t>(ef[3] + eg[3])};
            auto it = h.coeff.find(e);
            uint32_t cur = it == h.coeff.end() ? 0 : it->second;
            uint32_t nv = F.add(cur, F.mul(vf, vg));
            if (nv) h.coeff[e] = nv; else if (it != h.coeff.end()) h.coeff.erase(it);
        }
    return h;
}

MultiForm add(const FpField& F, const MultiForm& f, const MultiForm& g) {
    if (f.amb != g.amb || !(f.deg == g.deg))
        throw std::invalid_argument("add: shape mismatch");
    MultiForm h = f;
    for (auto& [e, v] : g.coeff) {
        auto it = h.coeff.find(e);
        uint32_t nv = F.add(it == h.coeff.end() ? 0 : it->second, v);
        if (nv) h.coeff[e] = nv; else if (it != h.coeff.end()) h.coeff.erase(it);
    }
    return h;
}

MultiForm scale(const FpField& F, const MultiForm& f, uint32_t s) {
    MultiForm h;
    h.amb = f.amb;
    h.deg = f.deg;
    if (s % F.p() == 0) return h;
    for (auto& [e, v] : f.coeff) h.coeff[e] = F.mul(v, s);
    return h;
}

uint32_t evaluate(const FpField& F, const MultiForm& f, const Point& pt) {
    uint64_t acc = 0;
    for (auto& [e, v] : f.coeff) {
        uint32_t t = v;
        for (int i = 0; i < 4; ++i)
            if (e[i]) t = F.mul(t, F.pow(pt[i], e[i]));
        acc += t;
    }
    return F.reduce_u64(acc);
}

MultiForm partial(const FpField& F, const MultiForm& f, int var) {
    MultiForm h;
    h.amb = f.amb;
    h.deg = f.deg;
    bool first_factor = (var < 2);
    if (f.amb == Ambient::P1xP1) {
        if (first_factor) h.deg.m -= 1; else h.deg.n -= 1;
    } else {
        h.deg.m -= 1;
    }
    for (auto& [e, v] : f.coeff) {
        if (e[var] == 0) continue;
        Expo d = e;
        d[var] = static_cast<int16_t>(d[var] - 1);
        uint32_t nv = F.mul(v, F.reduce(e[var]));
        if (!nv) continue;
        auto it = h.coeff.find(d);
        uint32_t cur = it == h.coeff.end() ? 0 : it->second;
        uint32_t s = F.add(cur, nv);
        if (s) h.coeff[d] = s; else if (it != h.coeff.end()) h.coeff.erase(it);
    }
    return h;
}

std::vector<uint32_t> coeff_vector(const MultiForm& f, const std::vector<Expo>& basis) {
    std::vector<uint32_t> v(basis.size(), 0);
    for (size_t i = 0; i < basis.size(); ++i) {
        auto it = f.coeff.find(basis[i]);
        if (it != f.coeff.end()) v[i] = it->second;
    }
    return v;
}

MultiForm from_coeff_vector(Ambient amb, Twist deg, const std::vector<Expo>& basis,
                            const std::vector<uint32_t>& v) {
    MultiForm f;
    f.amb = amb;
    f.deg = deg;
    for (size_t i = 0; i < basis.size(); ++i)
        if (v[i]) f.coeff[basis[i]] = v[i];
    return f;
}

MultiForm monomial_form(Ambient amb, Twist deg, const Expo& e) {
    MultiForm f;
    f.amb = amb;
    f.deg = deg;
    f.coeff[e] = 1;
    return f;
}

std::string to_string(const MultiForm& f) {
    static const char* vars2 = "xXyY"; // x0 x1 y0 y1
    static const char* vars3 = "abc";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, v] : f.coeff) {
        if (!first) os << " + ";
        first = false;
        os << v;
        if (f.amb == Ambient::P1xP1) {
            for (int i = 0; i < 4; ++i)
                if (e[i]) os << "*" << vars2[i] << "^" << e[i];
        } else {
            for (int i = 0; i < 3; ++i)
                if (e[i]) os << "*" << vars3[i] << "^" << e[i];
        }
    }
    if (first) os << "0";
    return os.str();
}

} // namespace syzygy
