#include "mukai/json_io.hpp"

namespace mukai {

Json to_json(const ClassVector& x) {
    Json a = Json::array();
    for (Int v : x.c) a.push_back(v);
    return a;
}

ClassVector class_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 10) throw precondition_error("class vector needs 10 integer coordinates");
    ClassVector x;
    for (std::size_t i = 0; i < 10; ++i) {
        if (!j[i].is_number_integer()) throw precondition_error("class vector coordinates must be integers");
        x.c[i] = j[i].get<Int>();
    }
    return x;
}

Json to_json(const MukaiVector& v) {
    Json j;
    j["r"] = v.r;
    j["c1"] = to_json(v.c1);
    j["s"] = v.s;
    return j;
}

MukaiVector mukai_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("r") || !j.contains("c1") || !j.contains("s"))
        throw precondition_error("Mukai vector needs fields r, c1, s");
    return MukaiVector(j["r"].get<Int>(), class_from_json(j["c1"]), j["s"].get<Int>());
}

Json to_json(const Move& m) {
    if (const auto* t = std::get_if<TwistMove>(&m)) {
        Json j;
        j["twist"] = to_json(t->D);
        return j;
    }
    if (std::get_if<SwitchMove>(&m)) return Json("switch");
    const auto& rb = std::get<ReBaseMove>(m);
    Json j;
    if (rb.change.name == "alternate" || rb.change.name == "swap") {
        j["rebase"] = rb.change.name;
    } else {
        Json rows = Json::array();
        for (const auto& row : rb.change.T) {
            Json r = Json::array();
            for (Int v : row) r.push_back(v);
            rows.push_back(r);
        }
        j["rebase"] = Json{{"matrix", rows}};
    }
    return j;
}

Move move_from_json(const Json& j) {
    if (j.is_string() && j.get<std::string>() == "switch") return make_switch();
    if (j.is_object() && j.contains("twist")) return make_twist(class_from_json(j["twist"]));
    if (j.is_object() && j.contains("rebase")) {
        const Json& rb = j["rebase"];
        if (rb.is_string()) {
            std::string name = rb.get<std::string>();
            if (name == "alternate") return make_rebase(alternate_decomposition());
            if (name == "swap") return make_rebase(swap_sigma_f());
            throw precondition_error("unknown rebase name: " + name);
        }
        if (rb.is_object() && rb.contains("matrix")) {
            const Json& rows = rb["matrix"];
            if (!rows.is_array() || rows.size() != 10) throw precondition_error("rebase matrix must be 10x10");
            Mat10 t{};
            for (std::size_t i = 0; i < 10; ++i) {
                if (!rows[i].is_array() || rows[i].size() != 10)
                    throw precondition_error("rebase matrix must be 10x10");
                for (std::size_t k = 0; k < 10; ++k) t[i][k] = rows[i][k].get<Int>();
            }
            return make_rebase(BasisChange::from_matrix(t));
        }
    }
    throw precondition_error("unrecognized move encoding");
}

Json to_json(const ReductionCertificate& c) {
    Json j;
    j["initial"] = to_json(c.initial);
    Json steps = Json::array();
    for (const CertStep& st : c.steps) {
        Json s;
        s["move"] = to_json(st.move);
        s["result"] = to_json(st.result);
        s["checks"] = st.checks;
        steps.push_back(s);
    }
    j["steps"] = steps;
    j["final"] = to_json(c.final_v);
    return j;
}

ReductionCertificate certificate_from_json(const Json& j) {
    ReductionCertificate c{mukai_from_json(j.at("initial")), {}, mukai_from_json(j.at("final"))};
    for (const Json& s : j.at("steps")) {
        CertStep st{move_from_json(s.at("move")), mukai_from_json(s.at("result")), {}};
        if (s.contains("checks"))
            for (const Json& ch : s["checks"]) st.checks.push_back(ch.get<std::string>());
        c.steps.push_back(std::move(st));
    }
    return c;
}

Json to_json(const Wall& w) {
    Json j;
    j["xi"] = to_json(w.xi);
    j["norm"] = norm(w.xi);
    j["type"] = Json::array({w.spec.r, w.spec.Delta});
    return j;
}

Json to_json(const Polarization& p) {
    Json j;
    j["L0"] = to_json(p.L0);
    j["n"] = p.n;
    j["H"] = to_json(p.H);
    j["H_norm"] = norm(p.H);
    j["path"] = p.perturbed ? "perturbation" : "direct";
    j["denominator"] = p.denominator;
    j["direct_attempts"] = p.direct_attempts;
    return j;
}

Json gram_to_json() {
    const Mat10& g = gram_matrix();
    Json rows = Json::array();
    for (const auto& row : g) {
        Json r = Json::array();
        for (Int v : row) r.push_back(v);
        rows.push_back(r);
    }
    Json j;
    j["basis"] = Json::array({"sigma", "f", "e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8"});
    j["gram"] = rows;
    j["det"] = -1;
    return j;
}

} // namespace mukai
