#include "chainring/serialize.hpp"

namespace chainring {

namespace {

template <class T>
T get_field(const json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("field '") + key + "': " + e.what());
    }
}

template <class T>
T get_or(const json& j, const char* key, T dflt) {
    return j.contains(key) ? get_field<T>(j, key) : dflt;
}

}  // namespace

RPoly rpoly_from_json_raw(const ChainRing* R, const json& j);

ChainRingSpec ring_spec_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("ring spec must be an object");
    auto v = get_field<std::string>(j, "variant");
    auto p = get_field<uint64_t>(j, "p");
    int r = get_or<int>(j, "r", 1);
    auto modulus = get_or<std::vector<uint64_t>>(j, "modulus", {});
    if (v == "Zpm") return ChainRingSpec::zpm(p, get_field<int>(j, "m"));
    if (v == "GaloisRing") return ChainRingSpec::galois(p, get_field<int>(j, "n"), r, modulus);
    if (v == "FqU") return ChainRingSpec::fqu(p, r, modulus, get_field<int>(j, "e"));
    if (v == "Eisenstein") {
        if (!j.contains("g") || !j["g"].is_array()) throw ParseError("Eisenstein ring needs array 'g'");
        std::vector<std::vector<int64_t>> g;
        for (auto& c : j["g"]) {
            if (c.is_number_integer())
                g.push_back({c.get<int64_t>()});
            else if (c.is_array())
                g.push_back(c.get<std::vector<int64_t>>());
            else
                throw ParseError("Eisenstein coefficient must be an integer or an integer vector");
        }
        return ChainRingSpec::eisenstein(p, get_field<int>(j, "n"), r, modulus, g, get_field<int>(j, "t"));
    }
    throw ParseError("unknown ring variant '" + v + "'");
}

json ring_spec_to_json(const ChainRingSpec& s) {
    using V = ChainRingSpec::Variant;
    json j;
    switch (s.variant) {
    case V::Zpm:
        return {{"variant", "Zpm"}, {"p", s.p}, {"m", s.n}};
    case V::GaloisRing:
        j = {{"variant", "GaloisRing"}, {"p", s.p}, {"n", s.n}, {"r", s.r}};
        break;
    case V::FqU:
        j = {{"variant", "FqU"}, {"p", s.p}, {"r", s.r}, {"e", s.e}};
        break;
    case V::Eisenstein:
        j = {{"variant", "Eisenstein"}, {"p", s.p}, {"n", s.n}, {"r", s.r}, {"g", s.g}, {"t", s.t}};
        break;
    }
    if (s.r > 1) j["modulus"] = s.modulus;
    return j;
}

RPoly rpoly_from_json(const ChainRing* R, const json& j) {
    RPoly f = rpoly_from_json_raw(R, j);
    if (f.ideg() > kMaxInputDegree) throw ParseError("polynomial degree exceeds " + std::to_string(kMaxInputDegree));
    return f;
}

RPoly rpoly_from_json_raw(const ChainRing* R, const json& j) {
    try {
        if (j.is_string()) return parse_rpoly(R, j.get<std::string>());
        if (j.is_number_integer()) return RPoly::constant(R, R->from_int(j.get<int64_t>()));
        if (j.is_array()) {
            std::vector<std::vector<uint32_t>> m;
            for (auto& row : j) m.push_back(row.get<std::vector<uint32_t>>());
            for (auto& row : m)
                for (auto d : row)
                    if (d >= R->q()) throw ParseError("digit out of range");
            return RPoly::from_digit_matrix(R, m);
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("polynomial: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    throw ParseError("polynomial must be a string or a digit matrix");
}

json rpoly_to_json(const RPoly& f) { return {{"digits", f.digit_matrix()}, {"text", f.to_string()}}; }

std::vector<RPoly> rpolys_from_json(const ChainRing* R, const json& j) {
    if (!j.is_array()) throw ParseError("generator list must be an array");
    std::vector<RPoly> out;
    for (auto& g : j) out.push_back(rpoly_from_json(R, g));
    return out;
}

FPoly fpoly_from_json(const Field* F, const json& j) {
    try {
        if (j.is_string()) return parse_fpoly(F, j.get<std::string>());
        if (j.is_array()) {
            auto c = j.get<std::vector<Field::Elem>>();
            for (auto d : c)
                if (d >= F->q()) throw ParseError("field code out of range");
            return FPoly(F, c);
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("residue polynomial: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    throw ParseError("residue polynomial must be a string or a coefficient array");
}

json fpoly_to_json(const FPoly& f) { return f.to_string(); }

InvariantSequence invseq_from_json(const Field* F, const json& j) {
    if (!j.is_array()) throw ParseError("invariant sequence must be an array");
    InvariantSequence a;
    for (auto& e : j) a.push_back(fpoly_from_json(F, e));
    return a;
}

json invseq_to_json(const InvariantSequence& a) {
    json out = json::array();
    for (auto& f : a) out.push_back(fpoly_to_json(f));
    return out;
}

json ideal_to_json(const Ideal& I) {
    json can = json::array();
    for (auto& f : I.canonical()) can.push_back(rpoly_to_json(f));
    return {{"ring", I.ring()->name()}, {"canonical", can}, {"invariant", invseq_to_json(I.invariant())}};
}

json report_to_json(const FrobeniusReport& rep) {
    json j = {{"artinian", rep.artinian}, {"local", rep.local}};
    j["frobenius"] = rep.frobenius ? json(*rep.frobenius) : json(nullptr);
    if (!rep.maximal.empty()) {
        json ms = json::array();
        for (auto& m : rep.maximal)
            ms.push_back({{"r", fpoly_to_json(m.rbar)},
                          {"annihilator", ideal_to_json(m.J)},
                          {"box_cover", m.box_cover}});
        j["maximal"] = ms;
    }
    if (rep.local) {
        j["alpha"] = fpoly_to_json(rep.alpha);
        j["exponents"] = rep.exponents;
        j["lambda"] = rep.lambda;
        json st = json::array();
        for (auto& s : rep.steps)
            st.push_back({{"j", s.j}, {"v", rpoly_to_json(s.v)}, {"K", ideal_to_json(s.K)}, {"member", s.member}});
        j["steps"] = st;
    }
    return j;
}

}  // namespace chainring
