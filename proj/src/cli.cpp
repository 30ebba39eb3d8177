#include "chainring/cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <iterator>
#include <sstream>

#include "chainring/frobenius.hpp"
#include "chainring/lattice.hpp"
#include "chainring/oracle.hpp"
#include "chainring/parallel.hpp"

namespace chainring::cli {

namespace {

using RingPtr = std::shared_ptr<const ChainRing>;

const std::vector<std::string> kCommands = {
    "canon", "invseq", "member", "colon", "intersect", "sum", "maximal", "covers", "enumerate", "downset",
    "poset", "frobenius", "local", "frobloc", "closedform", "oracle-check", "example-5-2", "example-6-3"};

RingPtr ring_of(const json& job) {
    if (!job.contains("ring")) throw ParseError("missing field 'ring'");
    auto spec = ring_spec_from_json(job["ring"]);
    try {
        return ChainRing::make(spec);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("ring: ") + e.what());
    }
}

const json& need(const json& job, const char* key) {
    if (!job.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return job[key];
}

Ideal ideal_of(const ChainRing* R, const json& job, const char* key = "ideal") {
    return canonical_sequence(R, rpolys_from_json(R, need(job, key)));
}

json poset_json(const std::vector<ParamIdeal>& items, bool with_edges, std::string* dot) {
    json nodes = json::array();
    std::vector<Ideal> ideals;
    std::vector<std::string> labels;
    for (size_t k = 0; k < items.size(); ++k) {
        const auto& pi = items[k];
        json params = json::object();
        for (auto& p : pi.params) params["b" + std::to_string(p.j) + std::to_string(p.k)] = fpoly_to_json(p.b);
        json can = json::array();
        for (auto& f : pi.ideal.canonical()) can.push_back(rpoly_to_json(f));
        nodes.push_back({{"id", k}, {"label", pi.label()}, {"invariant", invseq_to_json(pi.inv)},
                         {"params", params}, {"canonical", can}});
        ideals.push_back(pi.ideal);
        labels.push_back(pi.label());
    }
    json out = {{"count", items.size()}, {"nodes", nodes}};
    if (with_edges) {
        auto edges = hasse_diagram(ideals);
        json e = json::array();
        for (auto& [a, b] : edges) e.push_back({a, b});
        out["edges"] = e;
        if (dot) *dot = dot_export(labels, edges);
    }
    return out;
}

std::shared_ptr<const ChainRing> example52_ring() {
    return ChainRing::make(ChainRingSpec::eisenstein(2, 2, 1, {}, {{-2}, {0}, {1}}, 1));
}

json integer_family(const json& job) {
    std::vector<uint64_t> ps = {2, 3};
    std::vector<int> ns = {2, 3}, ms = {2, 3, 4, 5};
    if (job.contains("p")) ps = {job["p"].get<uint64_t>()};
    if (job.contains("n")) ns = {job["n"].get<int>()};
    if (job.contains("m")) ms = {job["m"].get<int>()};
    json rows = json::array();
    bool all = true;
    for (auto p : ps)
        for (int m : ms) {
            auto Z = ChainRing::make(ChainRingSpec::zpm(p, m));
            const ChainRing* R = Z.get();
            for (int n : ns)
                for (int a = 1; a < m; ++a)
                    for (int b = a + 1; b <= m; ++b) {
                        if (2 * b - a < m) continue;
                        RPoly g1 = RPoly::monomial(R, 1, n);
                        RPoly g2 = RPoly::monomial(R, R->pi_pow(a), n - 1) - RPoly::pi_pow(R, b);
                        Ideal I = canonical_sequence(R, {g1, g2});
                        auto rep = is_frobenius_local(I);
                        bool expected = 2 * b - a == m;
                        bool ok = rep.local && rep.frobenius_and_local() == expected;
                        all = all && ok;
                        rows.push_back({{"p", p}, {"n", n}, {"m", m}, {"a", a}, {"b", b},
                                        {"local", rep.local}, {"frobenius_local", rep.frobenius_and_local()},
                                        {"expected", expected}, {"lambda", rep.lambda}});
                    }
        }
    return {{"rows", rows}, {"all_match", all}};
}

json dispatch(const std::string& cmd, const json& job, std::string* dot) {
    if (cmd == "example-5-2") {
        auto Rp = example52_ring();
        const Field* F = Rp->field_ptr();
        FPoly a = parse_fpoly(F, "x+1"), b = parse_fpoly(F, "x^2+x+1");
        auto items = enumerate_downset(Rp.get(), {a * a * b, a, a});
        json out = poset_json(items, true, dot);
        out["ring"] = Rp->name();
        out["dot"] = *dot;
        return out;
    }
    if (cmd == "example-6-3") return integer_family(job);

    auto Rp = ring_of(job);
    const ChainRing* R = Rp.get();
    const Field* F = R->field_ptr();
    if (cmd == "canon") {
        Ideal I = ideal_of(R, job);
        json out = ideal_to_json(I);
        json g = json::array();
        for (auto& f : strong_groebner_basis(I)) g.push_back(rpoly_to_json(f));
        out["groebner"] = g;
        return out;
    }
    if (cmd == "invseq") return {{"invariant", invseq_to_json(ideal_of(R, job).invariant())}};
    if (cmd == "member") {
        Ideal I = ideal_of(R, job);
        RPoly f = rpoly_from_json(R, need(job, "poly"));
        RPoly r = reduce(f, I);
        return {{"member", r.is_zero()}, {"remainder", rpoly_to_json(r)}};
    }
    if (cmd == "colon") {
        Ideal I = ideal_of(R, job);
        RPoly p = rpoly_from_json(R, need(job, "poly"));
        return ideal_to_json(colon_elem(I, p));
    }
    if (cmd == "intersect") return ideal_to_json(intersect(ideal_of(R, job), ideal_of(R, job, "ideal2")));
    if (cmd == "sum") return ideal_to_json(sum(ideal_of(R, job), ideal_of(R, job, "ideal2")));
    if (cmd == "maximal") {
        json out = json::array();
        for (auto& m : maximal_ideals_over(ideal_of(R, job)))
            out.push_back({{"r", rpoly_to_json(m.r)}, {"ideal", ideal_to_json(m.M)}});
        return {{"maximal", out}};
    }
    if (cmd == "covers") {
        json out = json::array();
        for (auto& c : all_covers(ideal_of(R, job)))
            out.push_back({{"level", c.level}, {"rbar", fpoly_to_json(c.rbar)}, {"ideal", ideal_to_json(c.J)}});
        return {{"covers", out}};
    }
    if (cmd == "enumerate" || cmd == "downset" || cmd == "poset") {
        InvariantSequence A = invseq_from_json(F, need(job, "invseq"));
        if (static_cast<int>(A.size()) != R->N()) throw ParseError("invariant sequence length must equal N");
        try {
            check_invseq(A);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
        if (cmd == "enumerate") {
            auto items = enumerate_ideals_with_invseq(R, A);
            json out = poset_json(items, false, nullptr);
            out["predicted"] = predicted_count(R, A);
            return out;
        }
        return poset_json(enumerate_downset(R, A), cmd == "poset", dot);
    }
    if (cmd == "frobenius") return report_to_json(is_frobenius(ideal_of(R, job)));
    if (cmd == "frobloc") return report_to_json(is_frobenius_local(ideal_of(R, job)));
    if (cmd == "local") {
        Ideal I = ideal_of(R, job);
        FPoly alpha(F);
        std::vector<int> e;
        bool loc = local_exponents(I, alpha, e);
        json out = {{"local", loc}};
        if (loc) {
            out["alpha"] = fpoly_to_json(alpha);
            out["exponents"] = e;
        }
        return out;
    }
    if (cmd == "closedform") {
        Ideal I = ideal_of(R, job);
        json out = json::object();
        auto attempt = [&](const char* key, auto fn) {
            try {
                out[key] = fn(I);
            } catch (const MathError& e) {
                out[key] = nullptr;
                out[std::string(key) + "_reason"] = e.what();
            }
        };
        attempt("n2", closed_form_frobenius_n2);
        attempt("local_small_n", closed_form_frobenius_local_small_n);
        return out;
    }
    if (cmd == "oracle-check") {
        Ideal I = ideal_of(R, job);
        uint64_t cap = job.value("cap", kQuotientCap);
        auto Q = build_quotient(I, cap);
        auto ideals = all_ideals(Q);
        bool bf = brute_is_frobenius(Q), bl = brute_is_frobenius_local(Q);
        auto m = is_frobenius(I);
        auto l = is_frobenius_local(I);
        bool af = m.frobenius.value_or(false), al = l.frobenius_and_local();
        return {{"size", Q.size()},
                {"ideals", ideals.size()},
                {"minimal", minimal_ideals(Q, ideals).size()},
                {"maximal", maximal_ideals(Q, ideals).size()},
                {"frobenius", {{"oracle", bf}, {"algorithm", af}}},
                {"frobenius_local", {{"oracle", bl}, {"algorithm", al}}},
                {"agree", bf == af && bl == al}};
    }
    throw ParseError("unknown command '" + cmd + "'");
}

void flatten(const json& j, const std::string& path, std::ostringstream& os) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), os);
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        for (size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", os);
    } else {
        os << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

}  // namespace

Result run_job(const json& job, const std::string& format) {
    Result res;
    try {
        if (!job.is_object()) throw ParseError("job must be a JSON object");
        std::string cmd = job.value("command", std::string());
        if (cmd.empty()) throw ParseError("missing field 'command'");
        std::string fmt = format.empty() ? job.value("output", std::string("json")) : format;
        if (fmt != "json" && fmt != "text" && fmt != "dot") throw ParseError("unknown output format '" + fmt + "'");
        std::string dot;
        json out = dispatch(cmd, job, &dot);
        if (fmt == "dot") {
            if (dot.empty()) throw ParseError("dot output is only available for poset commands");
            res.out = dot;
        } else if (fmt == "text") {
            std::ostringstream os;
            flatten(out, "", os);
            res.out = os.str();
        } else {
            res.out = out.dump(2) + "\n";
        }
    } catch (const ParseError& e) {
        res = {kParse, "", std::string("parse error: ") + e.what() + "\n"};
    } catch (const json::exception& e) {
        res = {kParse, "", std::string("parse error: ") + e.what() + "\n"};
    } catch (const MathError& e) {
        res = {kMath, "", std::string("math error: ") + e.what() + "\n"};
    } catch (const std::exception& e) {
        res = {kMath, "", std::string("error: ") + e.what() + "\n"};
    }
    return res;
}

Result run_batch(const json& jobs, const std::string& format) {
    if (!jobs.is_array()) return {kParse, "", "parse error: batch input must be a JSON array\n"};
    std::vector<Result> rs(jobs.size());
    parallel_for(jobs.size(), [&](size_t i) { rs[i] = run_job(jobs[i], "json"); });
    json arr = json::array();
    Result total;
    for (auto& r : rs) {
        json item = {{"exit", r.code}};
        if (r.code == kOk)
            item["result"] = json::parse(r.out);
        else
            item["error"] = r.err;
        arr.push_back(item);
        total.code = std::max(total.code, r.code);
        total.err += r.err;
    }
    if (format == "text") {
        std::ostringstream os;
        flatten(arr, "jobs", os);
        total.out = os.str();
    } else {
        total.out = arr.dump(2) + "\n";
    }
    return total;
}

Result main(const std::vector<std::string>& args, std::istream& in) {
    CLI::App app{"Ideals of polynomial rings over finite chain rings", "chainring"};
    std::string command, format;
    bool dot = false, batch = false;
    app.add_option("command", command, "command (overrides the job's 'command' field)")
        ->check(CLI::IsMember(kCommands));
    app.add_flag("--dot", dot, "emit Graphviz DOT for poset commands");
    app.add_flag("--batch", batch, "stdin holds a JSON array of jobs");
    app.add_option("--format", format, "json | text | dot")->check(CLI::IsMember({"json", "text", "dot"}));
    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        return {kOk, app.help(), ""};
    } catch (const CLI::ParseError& e) {
        return {kParse, "", std::string("usage error: ") + e.what() + "\n" + app.help()};
    }
    if (dot) format = "dot";
    bool needs_input = batch || !(command == "example-5-2" || command == "example-6-3");
    json job = json::object();
    if (needs_input) {
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        if (!text.empty() && text.find_first_not_of(" \t\r\n") != std::string::npos) {
            try {
                job = json::parse(text);
            } catch (const json::exception& e) {
                return {kParse, "", std::string("parse error: ") + e.what() + "\n"};
            }
        }
    }
    if (batch) return run_batch(job, format);
    if (!command.empty()) {
        if (!job.is_object()) return {kParse, "", "parse error: job must be a JSON object\n"};
        job["command"] = command;
    }
    return run_job(job, format);
}

}  // namespace chainring::cli
