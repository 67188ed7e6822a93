/*
   Copyright 2026 The hecke authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "json_io.hpp"

#include <functional>

namespace hecke::jsonio {

namespace {

json coord_to_json(const Coord& c) {
    json a = json::array();
    for (long long x : c) a.push_back(x);
    return a;
}

Coord coord_from_json(const json& j) {
    Coord c;
    for (const auto& x : j) c.push_back(x.get<long long>());
    return c;
}

}  // namespace

json weight_to_json(const Weight& w) { return coord_to_json(w.fund); }
Weight weight_from_json(const json& j) { return Weight(coord_from_json(j)); }
json coweight_to_json(const Coweight& c) { return coord_to_json(c.fund); }
Coweight coweight_from_json(const json& j) { return Coweight(coord_from_json(j)); }

json root_datum_to_json(const RootDatum& d) {
    json j;
    j["family"] = std::string(1, d.type().family);
    j["rank"] = d.type().rank;
    json cm = json::array();
    for (std::size_t i = 0; i < d.rank(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < d.rank(); ++k) row.push_back(d.cartan(i, k));
        cm.push_back(row);
    }
    j["cartan_matrix"] = cm;
    json roots = json::array(), coroots = json::array();
    for (const auto& pr : d.positive_roots())
        roots.push_back({{"fund", weight_to_json(pr.weight)}, {"root", coord_to_json(pr.root)}});
    for (const auto& cr : d.positive_coroots())
        coroots.push_back({{"fund", coweight_to_json(cr.coweight)}, {"coroot", coord_to_json(cr.coroot)}});
    j["positive_roots"] = roots;
    j["positive_coroots"] = coroots;
    return j;
}

RootDatum root_datum_from_json(const json& j) {
    CartanType t;
    t.family = j.at("family").get<std::string>().at(0);
    t.rank = j.at("rank").get<int>();
    RootDatum d = build_root_system(t);
    // cross-check the serialized matrix when present
    if (j.contains("cartan_matrix")) {
        const auto& cm = j.at("cartan_matrix");
        for (std::size_t i = 0; i < d.rank(); ++i)
            for (std::size_t k = 0; k < d.rank(); ++k)
                if (cm.at(i).at(k).get<long long>() != d.cartan(i, k))
                    throw std::invalid_argument("root datum JSON disagrees with the named type");
    }
    return d;
}

json rep_to_json(const HighestWeightRep& rep) {
    json j;
    j["type"] = rep.type.str();
    j["highest"] = weight_to_json(rep.highest);
    j["dim"] = rep.dim().str();
    json table = json::array();
    for (const auto& [w, m] : rep.mult) table.push_back({{"coords", weight_to_json(w)}, {"mult", m.str()}});
    j["weights"] = table;
    return j;
}

json qpoly_to_json(const QPolynomial& p) {
    json a = json::array();
    for (const auto& [e, c] : p.coeffs()) a.push_back({e, c.str()});
    return json{{"coefficients", a}};
}

QPolynomial qpoly_from_json(const json& j) {
    QPolynomial p;
    for (const auto& pair : j.at("coefficients"))
        p += QPolynomial::monomial(pair.at(0).get<long long>(), BigInt(pair.at(1).get<std::string>()));
    return p;
}

json faces_to_json(const RootDatum& d, const RepSum& v, const std::vector<Face>& faces) {
    json out = json::array();
    for (const Face& f : faces) {
        json jf;
        jf["normal"] = coweight_to_json(f.normal);
        json fw = json::array(), cw = json::array();
        for (const Weight& w : f.face_weights) fw.push_back(weight_to_json(w));
        for (const Weight& w : f.complement_weights) cw.push_back(weight_to_json(w));
        jf["weights"] = fw;
        jf["complement"] = cw;
        const auto pd = face_parabolic(d, v, f);
        jf["levi"] = levi_type_string(d, pd) + " in " + d.type().str();
        jf["levi_action_ok"] = check_levi_action(d, v, f);
        out.push_back(std::move(jf));
    }
    return json{{"faces", out}};
}

json parabolic_to_json(const RootDatum& d, const ParabolicDescriptor& pd) {
    json j;
    j["levi_simple_roots"] = pd.levi_simple_roots;
    j["levi_type"] = levi_type_string(d, pd);
    json mat = json::array();
    for (const auto& row : pd.chamber.mat) mat.push_back(row);
    j["chamber"] = mat;
    j["dominant_cocharacter"] = coweight_to_json(pd.dominant_cochar);
    j["separating_cocharacter"] = coweight_to_json(cocharacter_for_parabolic(d, pd));
    return j;
}

json satake_to_json(const SatakeParameter& t) {
    json vals = json::array();
    for (const auto& v : t.values) vals.push_back({v.real(), v.imag()});
    return json{{"type", t.type.str()}, {"rank", t.type.rank}, {"values", vals}};
}

SatakeParameter satake_from_json(const json& j) {
    SatakeParameter t;
    t.type = CartanType::parse(j.at("type").get<std::string>());
    for (const auto& v : j.at("values"))
        t.values.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
    if (t.values.size() != static_cast<std::size_t>(t.type.rank))
        throw std::invalid_argument("satake parameter: rank mismatch");
    return t;
}

json witness_to_json(const WitnessResult& w) {
    json j;
    j["found"] = w.found;
    if (w.found) {
        j["n"] = w.n;
        j["k"] = w.k;
        j["trace_abs"] = w.trace_abs;
        j["dim"] = w.dim;
    }
    j["boxes_searched"] = w.boxes_searched;
    return j;
}

json radius_to_json(const SpectralRadiusResult& r) {
    json j;
    j["rho"] = r.rho;
    if (r.rho_exact) j["rho_exact"] = r.rho_exact->str();
    json eig = json::array();
    for (const auto& z : r.eigenvalues) eig.push_back({z.real(), z.imag()});
    j["eigenvalues"] = eig;
    json ex = json::array();
    for (const auto& [v, m] : r.exact_eigenvalues) ex.push_back({v.str(), m});
    j["exact_eigenvalues"] = ex;
    if (!r.conditioning.empty()) j["conditioning"] = r.conditioning;
    return j;
}

TraceSequence trace_sequence_from_json(const json& j) {
    TraceSequence s;
    s.dim_v = j.at("dim").get<long long>();
    const auto& entries = j.at("entries");
    s.is_exact = j.value("exact", true);
    for (const auto& e : entries) {
        if (s.is_exact)
            s.exact.emplace_back(e.get<std::string>());
        else
            s.numeric.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
    }
    return s;
}

json weil_claim_to_json(const WeilNumberClaim& c) {
    json poly = json::array();
    for (const auto& x : c.min_poly) poly.push_back(x.str());
    return json{{"min_poly", poly}, {"q", c.q.str()}, {"weight", c.weight}};
}

WeilNumberClaim weil_claim_from_json(const json& j) {
    WeilNumberClaim c;
    for (const auto& x : j.at("min_poly")) c.min_poly.emplace_back(x.get<std::string>());
    c.q = BigInt(j.at("q").get<std::string>());
    c.weight = j.at("weight").get<long long>();
    return c;
}

json verify_weil_to_json(const VerifyWeilResult& r) {
    json roots = json::array();
    for (const auto& rr : r.roots)
        roots.push_back({{"root", {rr.root.real(), rr.root.imag()}},
                         {"modulus", rr.modulus},
                         {"target", rr.target},
                         {"ok", rr.ok}});
    return json{{"ok", r.ok}, {"roots", roots}};
}

json exponential_sum_to_json(const ExponentialSum& s) {
    json terms = json::array();
    for (const auto& t : s.terms)
        terms.push_back({{"root", t.root.str()}, {"sign", t.sign}, {"mult", t.multiplicity.str()}});
    json j{{"terms", terms}, {"determined", s.determined}, {"recurrence_order", s.recurrence_order}};
    if (!s.note.empty()) j["note"] = s.note;
    return j;
}

std::vector<BigInt> sequence_from_json(const json& j) {
    std::vector<BigInt> s;
    const json& arr = j.is_object() ? j.at("sequence") : j;
    for (const auto& x : arr) {
        if (x.is_string())
            s.emplace_back(x.get<std::string>());
        else
            s.emplace_back(x.get<long long>());
    }
    return s;
}

json mgs_datum_to_json(const MonomialDatumModel& d) {
    json j;
    j["group"] = d.base.r() == 2 ? "SL2" : "SL3";
    j["q"] = d.base.q();
    j["m"] = d.base.m();
    j["h"] = d.h_tag;
    j["form"] = d.form_tag;
    if (d.torus) {
        json tw = json::array();
        for (const auto& w : d.torus->weights) tw.push_back(coord_to_json(w));
        j["torus_weights"] = tw;
        j["support"] = d.torus->support;
        j["git_semistable"] = git_semistable_torus(*d.torus);
    }
    return j;
}

json mgs_verdict_to_json(const MonomialDatumModel& d, const MgsVerdict& v) {
    json levels = json::array();
    for (const auto& lv : v.levels) {
        json jl;
        jl["n"] = lv.n;
        jl["pass"] = lv.pass;
        jl["complete"] = lv.complete;
        jl["subgroups_checked"] = lv.subgroups_checked;
        jl["disconnected_intersection_flag"] = lv.disconnected_intersection_flag;
        if (lv.witness) {
            TruncatedLoopGroupModel model(d.base.r(), d.base.q(), lv.n, d.base.m());
            jl["witness"] = {{"radical", lv.witness->radical},
                             {"transporter", model.str(lv.witness->transporter)},
                             {"intersection_size", lv.witness->intersection_size}};
        }
        levels.push_back(std::move(jl));
    }
    return json{{"datum", mgs_datum_to_json(d)},
                {"levels", levels},
                {"overall_pass", v.overall_pass},
                {"complete", v.complete},
                {"caveat", "necessary evidence up to n_max, not a proof"}};
}

json lang_report_to_json(const FrobeniusModel& fm, const LangReport& r) {
    json defects = json::array();
    for (const auto& g : r.defects) defects.push_back(fm.model().str(g));
    return json{{"surjective", r.surjective},
                {"degenerate", r.degenerate},
                {"image_size", r.image_size},
                {"domain_size", r.domain_size},
                {"defects", defects},
                {"caveat", "finite shadow of the algebraic-closure axiom"}};
}

json kottwitz_solutions_to_json(const FrobeniusModel& fm, const std::vector<KottwitzSolution>& sols) {
    json arr = json::array();
    for (const auto& s : sols) {
        arr.push_back({{"gamma", fm.model().str(s.gamma)},
                       {"delta", fm.model().str(s.delta)},
                       {"c", fm.model().str(s.c)},
                       {"l", s.l},
                       {"j", s.j},
                       {"a", s.a},
                       {"b", s.b}});
    }
    return json{{"solutions", arr}, {"count", sols.size()}};
}

json report_envelope(const std::string& command, const json& inputs, json outputs, double wall_ms,
                     json provenance) {
    // FNV-1a over the canonical input dump
    const std::string dump = inputs.dump();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : dump) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    json j;
    j["command"] = command;
    j["inputs_digest"] = h;
    j["outputs"] = std::move(outputs);
    j["provenance"] = std::move(provenance);
    j["wall_time_ms"] = wall_ms;
    return j;
}

}  // namespace hecke::jsonio
