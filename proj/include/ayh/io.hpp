#pragma once

#include <json.hpp>

#include "ayh/matrix_model.hpp"
#include "ayh/yokonuma.hpp"

namespace ayh {

using Json = nlohmann::ordered_json;

struct parse_error : std::runtime_error {
    int position; // character offset when parsing words, -1 otherwise

    parse_error(const std::string& msg, int pos = -1)
        : std::runtime_error(msg), position(pos) {}
};

// ---- coefficient encoding ----
// integer Laurent coefficients: {"<q-exp>": int, ...}
// extended coefficients:        {"<q-exp>": [[num, den, zeta-exp], ...], ...}

inline Json coeff_to_json(const LaurentZ& c) {
    Json out = Json::object();
    for (const auto& [e, v] : c.terms()) out[std::to_string(e)] = v;
    return out;
}

inline Json coeff_to_json(const Cyclotomic& c) {
    std::map<int, Json> by_qexp;
    for (size_t zexp = 0; zexp < c.comps().size(); ++zexp)
        for (const auto& [qe, rat] : c.comps()[zexp].terms()) {
            if (!by_qexp.count(qe)) by_qexp[qe] = Json::array();
            by_qexp[qe].push_back(Json::array({rat.num(), rat.den(), zexp}));
        }
    Json out = Json::object();
    for (const auto& [qe, arr] : by_qexp) out[std::to_string(qe)] = arr;
    return out;
}

inline LaurentZ laurent_from_json(const Json& j) {
    LaurentZ out;
    for (const auto& [key, val] : j.items()) {
        if (!val.is_number_integer()) throw parse_error("integer coefficient expected");
        out.add_term(std::stoi(key), val.get<long long>());
    }
    return out;
}

inline Cyclotomic cyclotomic_from_json(const Json& j, int r) {
    Cyclotomic out = Cyclotomic::zero(r);
    for (const auto& [key, val] : j.items()) {
        int qe = std::stoi(key);
        if (val.is_number_integer()) {
            out += Cyclotomic::from_laurent(
                r, LaurentQ::monomial(Rational(val.get<long long>()), qe));
            continue;
        }
        if (!val.is_array()) throw parse_error("coefficient entry must be int or array");
        for (const auto& triple : val) {
            if (!triple.is_array() || triple.size() != 3)
                throw parse_error("coefficient triple must be [num, den, zeta-exp]");
            Rational rat(triple[0].get<long long>(), triple[1].get<long long>());
            out += Cyclotomic::zeta_pow(r, triple[2].get<long long>()) *
                   Cyclotomic::from_laurent(r, LaurentQ::monomial(rat, qe));
        }
    }
    return out;
}

// ---- element documents ----

inline Json to_json(const HhatElem<LaurentZ>& e, const std::string& tag = "Hhat") {
    Json terms = Json::array();
    for (const auto& [k, c] : e.terms)
        terms.push_back({{"alpha", k.alpha},
                         {"lambda", k.lam.entries()},
                         {"w", k.w.images()},
                         {"coeff", coeff_to_json(c)}});
    return {{"algebra", tag}, {"r", e.r}, {"n", e.n}, {"terms", terms}};
}

inline Json to_json(const HhatElem<Cyclotomic>& e, const std::string& tag = "Hhat") {
    Json terms = Json::array();
    for (const auto& [k, c] : e.terms)
        terms.push_back({{"alpha", k.alpha},
                         {"lambda", k.lam.entries()},
                         {"w", k.w.images()},
                         {"coeff", coeff_to_json(c)}});
    return {{"algebra", tag}, {"r", e.r}, {"n", e.n}, {"terms", terms}};
}

inline Json to_json(const YElem& e) {
    Json terms = Json::array();
    for (const auto& [k, c] : e.terms)
        terms.push_back(
            {{"alpha", k.tpow}, {"w", k.w.images()}, {"coeff", coeff_to_json(c)}});
    return {{"algebra", "Y"}, {"r", e.r}, {"n", e.n}, {"terms", terms}};
}

inline Json to_json(const BernsteinElem& e) {
    Json terms = Json::array();
    for (const auto& [k, c] : e.terms)
        terms.push_back({{"alpha", k.a}, {"w", k.w.images()}, {"coeff", coeff_to_json(c)}});
    return {{"algebra", "AH"}, {"r", 1}, {"n", e.m}, {"terms", terms}};
}

inline Json to_json(const EElement& e) {
    Json terms = Json::array();
    for (const auto& [key, v] : e.blocks)
        for (const auto& [k, c] : v.terms)
            terms.push_back({{"block", Json::array({key.l1.entries(), key.l2.entries()})},
                             {"alpha", k.alpha},
                             {"lambda", k.lam.entries()},
                             {"w", k.w.images()},
                             {"coeff", coeff_to_json(c)}});
    return {{"algebra", "E"}, {"r", e.r}, {"n", e.n}, {"terms", terms}};
}

inline void check_doc(const Json& j, const std::string& tag) {
    if (!j.is_object() || !j.contains("algebra") || !j.contains("r") || !j.contains("n") ||
        !j.contains("terms"))
        throw parse_error("element document must have algebra, r, n, terms");
    if (j["algebra"] != tag) throw parse_error("algebra tag mismatch: expected " + tag);
}

inline HhatElem<LaurentZ> hhat_from_json(const Json& j, const std::string& tag = "Hhat") {
    check_doc(j, tag);
    int r = j["r"], n = j["n"];
    HhatElem<LaurentZ> out(r, n);
    for (const auto& t : j["terms"]) {
        std::vector<int> alpha = t["alpha"].get<std::vector<int>>();
        ResidueTuple lam(r, t["lambda"].get<std::vector<int>>());
        Perm w(t["w"].get<std::vector<int>>());
        if (static_cast<int>(alpha.size()) != n || lam.n() != n || w.n() != n)
            throw parse_error("term arity mismatch");
        if (tag == "H")
            for (int a : alpha)
                if (a != 0) throw parse_error("finite-part element cannot carry X exponents");
        out.add({std::move(alpha), std::move(lam), std::move(w)},
                laurent_from_json(t["coeff"]));
    }
    return out;
}

inline YElem y_from_json(const Json& j) {
    check_doc(j, "Y");
    int r = j["r"], n = j["n"];
    YElem out(r, n);
    for (const auto& t : j["terms"]) {
        std::vector<int> tpow = t["alpha"].get<std::vector<int>>();
        Perm w(t["w"].get<std::vector<int>>());
        if (static_cast<int>(tpow.size()) != n || w.n() != n)
            throw parse_error("term arity mismatch");
        for (int v : tpow)
            if (v < 0 || v >= r) throw parse_error("t-exponent out of range");
        out.add({std::move(tpow), std::move(w)}, cyclotomic_from_json(t["coeff"], r));
    }
    return out;
}

inline BernsteinElem bernstein_from_json(const Json& j) {
    check_doc(j, "AH");
    int n = j["n"];
    BernsteinElem out(n);
    for (const auto& t : j["terms"]) {
        std::vector<int> a = t["alpha"].get<std::vector<int>>();
        Perm w(t["w"].get<std::vector<int>>());
        if (static_cast<int>(a.size()) != n || w.n() != n)
            throw parse_error("term arity mismatch");
        out.add({std::move(a), std::move(w)}, laurent_from_json(t["coeff"]));
    }
    return out;
}

inline EElement e_from_json(const Json& j) {
    check_doc(j, "E");
    int r = j["r"], n = j["n"];
    EElement out(r, n);
    for (const auto& t : j["terms"]) {
        if (!t.contains("block")) throw parse_error("E-element terms need a block key");
        ResidueTuple l1(r, t["block"][0].get<std::vector<int>>());
        ResidueTuple l2(r, t["block"][1].get<std::vector<int>>());
        HhatElem<LaurentZ> v(r, n);
        v.add({t["alpha"].get<std::vector<int>>(),
               ResidueTuple(r, t["lambda"].get<std::vector<int>>()),
               Perm(t["w"].get<std::vector<int>>())},
              laurent_from_json(t["coeff"]));
        out.add_block({std::move(l1), std::move(l2)}, v);
    }
    return out;
}

// ---- generator words ----
// whitespace-separated tokens; the diagnostics carry the character offset
//   Hhat/H:  g2  g2^-1  X1  X1^-3  1(1,2,1)
//   Y:       t1  t2^3  h1
//   AH:      T1  T1^-1  Z2^-1  pi  pi^-1

struct WordToken {
    std::string text;
    int offset;
};

inline std::vector<WordToken> tokenize_word(const std::string& input) {
    std::vector<WordToken> out;
    size_t i = 0;
    while (i < input.size()) {
        if (std::isspace(static_cast<unsigned char>(input[i]))) {
            ++i;
            continue;
        }
        size_t j = i;
        while (j < input.size() && !std::isspace(static_cast<unsigned char>(input[j]))) ++j;
        out.push_back({input.substr(i, j - i), static_cast<int>(i)});
        i = j;
    }
    return out;
}

inline std::pair<int, int> parse_index_exp(const std::string& body, const WordToken& tok) {
    size_t caret = body.find('^');
    try {
        if (caret == std::string::npos) return {std::stoi(body), 1};
        return {std::stoi(body.substr(0, caret)), std::stoi(body.substr(caret + 1))};
    } catch (const std::exception&) {
        throw parse_error("malformed token '" + tok.text + "'", tok.offset);
    }
}

inline GenWord parse_hhat_word(const std::string& input, int r, int n, bool allow_x) {
    GenWord word;
    for (const auto& tok : tokenize_word(input)) {
        const std::string& s = tok.text;
        if (s == "1") continue;
        if (s.size() >= 2 && s[0] == 'g') {
            auto [i, e] = parse_index_exp(s.substr(1), tok);
            if (i < 1 || i >= n) throw parse_error("generator index out of range", tok.offset);
            if (e != 1 && e != -1)
                throw parse_error("g exponents must be +-1", tok.offset);
            word.push_back(e == 1 ? GenLetter::g(i) : GenLetter::ginv(i));
        } else if (s.size() >= 2 && s[0] == 'X') {
            if (!allow_x) throw parse_error("X letters are not part of this algebra", tok.offset);
            auto [j, e] = parse_index_exp(s.substr(1), tok);
            if (j < 1 || j > n) throw parse_error("X index out of range", tok.offset);
            if (e == 0) continue;
            word.push_back(GenLetter::x(j, e));
        } else if (s.size() >= 3 && s[0] == '1' && s[1] == '(' && s.back() == ')') {
            std::vector<int> entries;
            std::string inner = s.substr(2, s.size() - 3);
            size_t pos = 0;
            try {
                while (pos < inner.size()) {
                    size_t comma = inner.find(',', pos);
                    if (comma == std::string::npos) comma = inner.size();
                    entries.push_back(std::stoi(inner.substr(pos, comma - pos)));
                    pos = comma + 1;
                }
            } catch (const std::exception&) {
                throw parse_error("malformed idempotent '" + s + "'", tok.offset);
            }
            if (static_cast<int>(entries.size()) != n)
                throw parse_error("idempotent tuple has wrong length", tok.offset);
            for (int v : entries)
                if (v < 1 || v > r) throw parse_error("idempotent entry out of range", tok.offset);
            word.push_back(GenLetter::idem(ResidueTuple(r, entries)));
        } else {
            throw parse_error("unknown token '" + s + "'", tok.offset);
        }
    }
    return word;
}

// tokens for the original presentation, evaluated directly
inline YElem eval_y_word(const YAlgebra& Y, const std::string& input) {
    YElem out = Y.unit();
    for (const auto& tok : tokenize_word(input)) {
        const std::string& s = tok.text;
        if (s == "1") continue;
        if (s.size() >= 2 && s[0] == 't') {
            auto [j, e] = parse_index_exp(s.substr(1), tok);
            if (j < 1 || j > Y.n()) throw parse_error("t index out of range", tok.offset);
            out = Y.mul_t(out, j, e);
        } else if (s.size() >= 2 && s[0] == 'h') {
            auto [i, e] = parse_index_exp(s.substr(1), tok);
            if (i < 1 || i >= Y.n()) throw parse_error("h index out of range", tok.offset);
            if (e != 1) throw parse_error("h exponents are not supported", tok.offset);
            out = Y.mul_h(out, i);
        } else {
            throw parse_error("unknown token '" + s + "'", tok.offset);
        }
    }
    return out;
}

inline BernsteinElem eval_ah_word(const AffineHecke& H, const std::string& input) {
    BernsteinElem out = H.one();
    for (const auto& tok : tokenize_word(input)) {
        const std::string& s = tok.text;
        if (s == "1") continue;
        if (s == "pi") {
            out = H.mul(out, H.pi_image());
        } else if (s == "pi^-1") {
            out = H.mul(out, H.pi_inv_image());
        } else if (s.size() >= 2 && s[0] == 'T') {
            auto [i, e] = parse_index_exp(s.substr(1), tok);
            if (i < 1 || i >= H.rank()) throw parse_error("T index out of range", tok.offset);
            if (e != 1 && e != -1) throw parse_error("T exponents must be +-1", tok.offset);
            out = H.mul(out, e == 1 ? H.gen_T(i) : H.gen_Tinv(i));
        } else if (s.size() >= 2 && s[0] == 'Z') {
            auto [j, e] = parse_index_exp(s.substr(1), tok);
            if (j < 1 || j > H.rank()) throw parse_error("Z index out of range", tok.offset);
            if (e != 0) out = H.mul(out, H.gen_Z(j, e > 0 ? 1 : -1));
            for (int rep = 1; rep < std::abs(e); ++rep)
                out = H.mul(out, H.gen_Z(j, e > 0 ? 1 : -1));
        } else {
            throw parse_error("unknown token '" + s + "'", tok.offset);
        }
    }
    return out;
}

} // namespace ayh
