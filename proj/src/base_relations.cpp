#include "zeckit/base_relations.hpp"

#include <algorithm>

#include "zeckit/inference.hpp"
#include "zeckit/parser.hpp"
#include "zeckit/regex.hpp"

namespace zeckit {

namespace {

class Certificate {
public:
    explicit Certificate(std::string relation) : relation_(std::move(relation)) {}

    void check(const std::string& property, bool ok) {
        entries_.emplace_back(property, ok);
        if (!ok) throw CertificationError(relation_ + ": certification property '" + property + "' failed");
    }

    CertifiedRelation finish(Dfa a) && { return {relation_, std::move(a), std::move(entries_)}; }

private:
    std::string relation_;
    std::vector<std::pair<std::string, bool>> entries_;
};

bool holds(const Registry& reg, const char* sentence) { return eval_sentence(parse(sentence), reg); }

Registry with(const Registry& reg, const std::string& name, const Dfa& a) {
    Registry out = reg;
    out.add(name, a);
    return out;
}

std::vector<std::string> positional_labels(int tracks) {
    std::vector<std::string> labels;
    for (int t = 0; t < tracks; ++t) labels.push_back("x" + std::to_string(t));
    return labels;
}

// Digits of each value left-padded to a common length.
std::vector<std::vector<std::uint8_t>> padded_digits(std::uint64_t max_value, std::size_t length) {
    std::vector<std::vector<std::uint8_t>> out;
    out.reserve(max_value + 1);
    for (std::uint64_t v = 0; v <= max_value; ++v) out.push_back(encode_u64(v).padded(length).digits());
    return out;
}

bool accepts_pair(const Dfa& a, const ZeckWord& x, const ZeckWord& y) {
    const std::size_t n = std::max(x.size(), y.size());
    const ZeckWord px = x.padded(n), py = y.padded(n);
    const auto& dx = px.digits();
    const auto& dy = py.digits();
    State q = a.initial();
    for (std::size_t i = 0; i < n; ++i) q = a.next(q, static_cast<Symbol>(dx[i] << 1 | dy[i]));
    return a.is_final(q);
}

}  // namespace

Dfa build_validity(int tracks) {
    return restrict_valid(universal(tracks)).with_labels(positional_labels(tracks));
}

CertifiedRelation build_less_than(const CertificationBounds& b) {
    // 0: equal so far, 1: x < y decided, 2: x > y decided.
    std::vector<State> delta = {0, 1, 2, 0, 1, 1, 1, 1, 2, 2, 2, 2};
    Dfa lt = minimize(restrict_valid(Dfa(2, 0, {false, true, false}, std::move(delta))))
                 .with_labels(positional_labels(2));

    Certificate cert("lt");
    const std::size_t length = encode_u64(b.less_than).size();
    const auto digits = padded_digits(b.less_than, length);
    bool agree = true;
    for (std::uint64_t x = 0; x <= b.less_than && agree; ++x) {
        for (std::uint64_t y = 0; y <= b.less_than; ++y) {
            State q = lt.initial();
            for (std::size_t i = 0; i < length; ++i)
                q = lt.next(q, static_cast<Symbol>(digits[x][i] << 1 | digits[y][i]));
            if (lt.is_final(q) != (x < y)) {
                agree = false;
                break;
            }
        }
    }
    cert.check("agrees with integer order for x, y <= " + std::to_string(b.less_than), agree);
    return std::move(cert).finish(std::move(lt));
}

CertifiedRelation build_successor(const Registry& with_lt, const CertificationBounds& b) {
    Dfa succ = guess_function(1, b.successor_samples - 1,
                              [](std::span<const std::uint64_t> in) { return in[0] + 1; });
    const Registry reg = with(with_lt, "succ", succ);
    Certificate cert("succ");
    cert.check("total", holds(reg, "An Em $succ(n,m)"));
    cert.check("functional", holds(reg, "~En,m,p $succ(n,m) & $succ(n,p) & m!=p"));
    cert.check("increasing", holds(reg, "An,m $succ(n,m) => n<m"));
    cert.check("nothing in between", holds(reg, "An,m,k $succ(n,m) => ~(n<k & k<m)"));
    cert.check("succ(0,1)", holds(reg, "$succ(0,1)"));
    return std::move(cert).finish(std::move(succ));
}

CertifiedRelation build_adder(const Registry& with_succ, const CertificationBounds& b) {
    Dfa add = guess_function(2, b.adder_samples,
                             [](std::span<const std::uint64_t> in) { return in[0] + in[1]; });
    const Registry reg = with(with_succ, "add", add);
    Certificate cert("add");
    cert.check("total", holds(reg, "Ax,y Ez $add(x,y,z)"));
    cert.check("functional", holds(reg, "~Ex,y,z,w $add(x,y,z) & $add(x,y,w) & z!=w"));
    cert.check("identity", holds(reg, "Ax $add(x,0,x)"));
    cert.check("commutative", holds(reg, "Ax,y,z $add(x,y,z) <=> $add(y,x,z)"));
    cert.check("successor step",
               holds(reg, "Ax,y,u,z,v ($add(x,y,z) & $succ(y,u) & $succ(z,v)) => $add(x,u,v)"));
    return std::move(cert).finish(std::move(add));
}

CertifiedRelation build_shift(const Registry& with_lt, const CertificationBounds& b) {
    Dfa shift = minimize(restrict_valid(regex_to_dfa(kShiftPattern, 2))).with_labels(positional_labels(2));
    const Registry reg = with(with_lt, "shift", shift);
    Certificate cert("shift");
    bool agree = true;
    for (std::uint64_t x = 0; x <= b.shift && agree; ++x) {
        ZeckWord w = encode_u64(x);
        agree = accepts_pair(shift, w, encode_u64(decode_u64(w.shifted())));
    }
    cert.check("appends a zero for x <= " + std::to_string(b.shift), agree);
    cert.check("total", holds(reg, "Ax Ey $shift(x,y)"));
    cert.check("functional", holds(reg, "~Ex,y,z $shift(x,y) & $shift(x,z) & y!=z"));
    return std::move(cert).finish(std::move(shift));
}

CertifiedRelation build_phin(const Registry& with_shift, const CertificationBounds& b) {
    // floor(alpha n) = [(n)_F 0]_F - 1 when (n)_F ends in an even number of
    // zeros, and [(n)_F 0]_F otherwise. For n = 0 the word has no 1 and the
    // shift alone gives 0.
    Registry reg = with(with_shift, "tzeven", restrict_valid(regex_to_dfa("(0|1)*1(00)*", 1)));
    Dfa phin = compile(parse("Ey $shift(n,y) & (($tzeven(n) & x+1=y) | (~$tzeven(n) & x=y))"), reg)
                   .with_labels(positional_labels(2));
    reg = with(with_shift, "phin", phin);
    Certificate cert("phin");
    bool agree = true;
    for (std::uint64_t n = 0; n <= b.phin && agree; ++n)
        agree = accepts_pair(phin, encode_u64(n), encode_u64(floor_alpha_u64(n)));
    cert.check("agrees with floor(alpha n) for n <= " + std::to_string(b.phin), agree);
    cert.check("total", holds(reg, "An Ex $phin(n,x)"));
    cert.check("functional", holds(reg, "~En,x,y $phin(n,x) & $phin(n,y) & x!=y"));
    cert.check("strictly increasing", holds(reg, "An,x,y ($phin(n,x) & $phin(n+1,y)) => x<y"));
    return std::move(cert).finish(std::move(phin));
}

CertifiedRelation build_phi2n(const Registry& with_phin, const CertificationBounds& b) {
    Dfa phi2n = compile(parse("Ey $phin(n,y) & x=n+y"), with_phin).with_labels(positional_labels(2));
    const Registry reg = with(with_phin, "phi2n", phi2n);
    Certificate cert("phi2n");
    bool agree = true;
    for (std::uint64_t n = 0; n <= b.phi2n && agree; ++n)
        agree = accepts_pair(phi2n, encode_u64(n), encode_u64(n + floor_alpha_u64(n)));
    cert.check("agrees with floor(alpha^2 n) for n <= " + std::to_string(b.phi2n), agree);
    cert.check("total", holds(reg, "An Ex $phi2n(n,x)"));
    cert.check("functional", holds(reg, "~En,x,y $phi2n(n,x) & $phi2n(n,y) & x!=y"));
    return std::move(cert).finish(std::move(phi2n));
}

BaseRelations certify_base_relations(const CertificationBounds& b,
                                     const std::function<void(const CertifiedRelation&)>& progress) {
    BaseRelations out;
    for (int k = 1; k <= 3; ++k) out.registry.add_reserved("valid_" + std::to_string(k), build_validity(k));
    auto keep = [&](CertifiedRelation r) {
        out.registry.add_reserved(r.name, r.automaton);
        if (progress) progress(r);
        out.relations.push_back(std::move(r));
    };
    keep(build_less_than(b));
    keep(build_successor(out.registry, b));
    keep(build_adder(out.registry, b));
    keep(build_shift(out.registry, b));
    keep(build_phin(out.registry, b));
    keep(build_phi2n(out.registry, b));
    return out;
}

std::vector<std::string> reserved_names() {
    return {"valid_1", "valid_2", "valid_3", "lt", "succ", "add", "shift", "phin", "phi2n"};
}

}  // namespace zeckit
