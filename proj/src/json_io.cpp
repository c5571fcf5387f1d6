#include "depth/json_io.hpp"

#include <sstream>

namespace depth {

namespace {

const BigInt kJsonMax("9007199254740991");  // 2^53 − 1

}  // namespace

Json int_to_json(const BigInt& v) {
    if (v <= kJsonMax && v >= -kJsonMax) return Json(v.get_si());
    return Json(v.get_str());
}

BigInt int_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw std::invalid_argument("expected integer (number or decimal string)");
}

Json rat_to_json(const BigRat& v) { return Json(rat_to_string(v)); }

BigRat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return BigRat(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw std::invalid_argument("expected rational (\"p/q\" string or integer)");
}

Json matrix_to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

IntMatrix matrix_from_json(const Json& j) {
    std::size_t r = j.at("rows").get<std::size_t>();
    std::size_t c = j.at("cols").get<std::size_t>();
    const Json& e = j.at("entries");
    if (e.size() != r) throw std::invalid_argument("matrix JSON: row count mismatch");
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (e[i].size() != c) throw std::invalid_argument("matrix JSON: column count mismatch");
        for (std::size_t k = 0; k < c; ++k) m.at(i, k) = int_from_json(e[i][k]);
    }
    return m;
}

Json group_to_json(const PermGroup& g) {
    Json gens = Json::array();
    for (const auto& p : g.generators()) {
        Json cycles = Json::array();
        for (const auto& cyc : p.cycles()) cycles.push_back(cyc);
        gens.push_back(std::move(cycles));
    }
    return Json{{"degree", g.degree()}, {"generators", std::move(gens)}};
}

std::vector<Permutation> generators_from_json(const Json& j, std::size_t degree) {
    if (!j.is_array()) throw std::invalid_argument("generators: expected an array");
    std::vector<Permutation> gens;
    for (const Json& gen : j) {
        if (!gen.is_array() || gen.empty()) {
            if (gen.is_array()) continue;  // empty generator = identity, skip
            throw std::invalid_argument("generator: expected an array of cycles");
        }
        std::vector<std::vector<int>> cycles;
        if (gen[0].is_number_integer()) {
            cycles.push_back(gen.get<std::vector<int>>());  // single bare cycle
        } else {
            for (const Json& cyc : gen) cycles.push_back(cyc.get<std::vector<int>>());
        }
        gens.push_back(Permutation::from_cycles(degree, cycles));
    }
    return gens;
}

PermGroup group_from_json(const Json& j, std::size_t cap) {
    std::size_t degree = j.at("degree").get<std::size_t>();
    return PermGroup(degree, generators_from_json(j.at("generators"), degree), cap);
}

PermGroup group_from_spec(const std::string& spec, std::size_t cap) {
    std::string s = spec;
    auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos) throw std::invalid_argument("empty group spec");
    if (s[first] == '{' || s[first] == '[') {
        Json j = Json::parse(s);
        if (j.is_object()) return group_from_json(j, cap);
        // bare generator list: infer the degree from the largest point
        int degree = 1;
        std::function<void(const Json&)> scan = [&](const Json& node) {
            if (node.is_number_integer()) degree = std::max(degree, node.get<int>());
            else if (node.is_array())
                for (const auto& c : node) scan(c);
        };
        scan(j);
        return PermGroup(static_cast<std::size_t>(degree),
                         generators_from_json(j, static_cast<std::size_t>(degree)), cap);
    }
    return named_group(spec, cap);
}

Json table_to_json(const CharacterTable& t) {
    Json classes = Json::array();
    for (std::size_t c = 0; c < t.class_count(); ++c) {
        Json cyc = Json::array();
        for (const auto& one : t.class_rep(c).cycles()) cyc.push_back(one);
        classes.push_back(Json{{"rep", std::move(cyc)}, {"size", t.class_size(c)}});
    }
    Json irrs = Json::array();
    for (const auto& ch : t.irreducibles()) {
        Json values = Json::array();
        for (const auto& v : ch.values) {
            Json coeffs = Json::array();
            for (const auto& m : v) coeffs.push_back(int_to_json(m));
            values.push_back(std::move(coeffs));
        }
        irrs.push_back(Json{{"degree", int_to_json(ch.degree)}, {"values", std::move(values)}});
    }
    return Json{{"group", group_to_json(t.group())},
                {"classes", std::move(classes)},
                {"exponent", t.exponent()},
                {"irreducibles", std::move(irrs)}};
}

CharacterTable table_from_json(const Json& j, std::size_t cap) {
    PermGroup g = group_from_json(j.at("group"), cap);
    std::size_t e = j.at("exponent").get<std::size_t>();
    // validate the emitted class metadata against the reconstructed group
    const Json& classes = j.at("classes");
    if (classes.size() != g.conjugacy_classes().count())
        throw std::invalid_argument("table JSON: class count mismatch");
    for (std::size_t c = 0; c < classes.size(); ++c) {
        std::vector<std::vector<int>> cycles;
        for (const auto& cyc : classes[c].at("rep")) cycles.push_back(cyc.get<std::vector<int>>());
        Permutation rep = Permutation::from_cycles(g.degree(), cycles);
        std::size_t idx = g.conjugacy_classes().class_of_element[g.index_of(rep)];
        if (g.conjugacy_classes().class_sizes[idx] != classes[c].at("size").get<std::size_t>())
            throw std::invalid_argument("table JSON: class size mismatch");
    }
    std::vector<Character> irrs;
    for (const Json& cj : j.at("irreducibles")) {
        Character ch;
        ch.degree = int_from_json(cj.at("degree"));
        for (const Json& vj : cj.at("values")) {
            CycVec v;
            for (const Json& mj : vj) v.push_back(int_from_json(mj));
            if (v.size() != e) throw std::invalid_argument("table JSON: value vector length != exponent");
            ch.values.push_back(std::move(v));
        }
        irrs.push_back(std::move(ch));
    }
    return CharacterTable(std::move(g), e, std::move(irrs));  // re-verifies orthogonality
}

Json hopf_to_json(const HopfData& h) {
    std::size_t d = h.dim();
    auto tensor = [&](const std::vector<BigRat>& t) {
        Json out = Json::array();
        for (std::size_t i = 0; i < d; ++i) {
            Json plane = Json::array();
            for (std::size_t j = 0; j < d; ++j) {
                Json row = Json::array();
                for (std::size_t k = 0; k < d; ++k) row.push_back(rat_to_json(t[(i * d + j) * d + k]));
                plane.push_back(std::move(row));
            }
            out.push_back(std::move(plane));
        }
        return out;
    };
    Json unit = Json::array(), counit = Json::array();
    for (std::size_t i = 0; i < d; ++i) {
        unit.push_back(rat_to_json(h.alg.unit[i]));
        counit.push_back(rat_to_json(h.counit[i]));
    }
    Json anti = Json::array();
    for (std::size_t i = 0; i < d; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < d; ++j) row.push_back(rat_to_json(h.antipode.at(i, j)));
        anti.push_back(std::move(row));
    }
    return Json{{"dim", d},          {"mult", tensor(h.alg.mult)}, {"unit", std::move(unit)},
                {"comult", tensor(h.comult)}, {"counit", std::move(counit)},
                {"antipode", std::move(anti)}};
}

HopfData hopf_from_json(const Json& j) {
    std::size_t d = j.at("dim").get<std::size_t>();
    HopfData h;
    h.alg = AlgData::zero(d);
    h.comult.assign(d * d * d, BigRat());
    h.counit.assign(d, BigRat());
    h.antipode = RatMatrix(d, d);
    auto read_tensor = [&](const Json& t, std::vector<BigRat>& dst) {
        if (t.size() != d) throw std::invalid_argument("hopf JSON: tensor shape");
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t jj = 0; jj < d; ++jj)
                for (std::size_t k = 0; k < d; ++k)
                    dst[(i * d + jj) * d + k] = rat_from_json(t[i][jj][k]);
    };
    read_tensor(j.at("mult"), h.alg.mult);
    read_tensor(j.at("comult"), h.comult);
    for (std::size_t i = 0; i < d; ++i) {
        h.alg.unit[i] = rat_from_json(j.at("unit")[i]);
        h.counit[i] = rat_from_json(j.at("counit")[i]);
        for (std::size_t k = 0; k < d; ++k) h.antipode.at(i, k) = rat_from_json(j.at("antipode")[i][k]);
    }
    return h;
}

Json quad_to_json(const DepthQuad& q) {
    return Json{{"d_odd", q.d_odd},
                {"d_ev", q.d_ev},
                {"d_min", q.d_min},
                {"d_h", q.d_h},
                {"q", int_to_json(q.q)},
                {"stabilization", Json{{"n_odd", q.n_odd}, {"n_ev", q.n_ev}, {"n_h", q.n_h}}}};
}

Json report_to_json(const DepthReport& r) {
    Json j;
    j["scenario"] = r.scenario;
    Json depths;
    if (r.quad) {
        depths = quad_to_json(*r.quad);
    } else if (r.d_odd) {
        depths["d_odd"] = *r.d_odd;
    }
    j["depths"] = std::move(depths);
    Json claims = Json::array();
    for (const auto& c : r.claims)
        claims.push_back(Json{{"id", c.id},
                              {"instance", c.instance},
                              {"lhs", c.lhs},
                              {"rhs", c.rhs},
                              {"paper_value", c.paper_value},
                              {"verdict", c.pass ? "PASS" : "FAIL"}});
    j["claims"] = std::move(claims);
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back(Json{{"name", c.name}, {"pass", c.pass}});
    j["checks"] = std::move(checks);
    Json mats;
    for (const auto& [name, m] : r.matrices) mats[name] = matrix_to_json(m);
    j["matrices"] = std::move(mats);
    Json info;
    for (const auto& [k, v] : r.info) info[k] = v;
    j["info"] = std::move(info);
    return j;
}

std::string report_to_markdown(const DepthReport& r) {
    std::ostringstream out;
    out << "# depth report: " << r.scenario << "\n\n";
    if (r.quad) {
        out << "| d_odd | d_ev | d_min | d_h | q |\n|---|---|---|---|---|\n";
        out << "| " << r.quad->d_odd << " | " << r.quad->d_ev << " | " << r.quad->d_min << " | "
            << r.quad->d_h << " | " << r.quad->q.get_str() << " |\n\n";
    } else if (r.d_odd) {
        out << "d_odd = " << *r.d_odd << " (even and H-depth not computed)\n\n";
    }
    if (!r.claims.empty()) {
        out << "## claims\n\n| id | instance | lhs | rhs | verdict |\n|---|---|---|---|---|\n";
        for (const auto& c : r.claims)
            out << "| " << c.id << " | " << c.instance << " | " << c.lhs << " | " << c.rhs << " | "
                << (c.pass ? "PASS" : "FAIL") << " |\n";
        out << "\n";
    }
    if (!r.checks.empty()) {
        out << "## checks\n\n";
        for (const auto& c : r.checks)
            out << "- [" << (c.pass ? "x" : " ") << "] " << c.name << "\n";
        out << "\n";
    }
    for (const auto& [k, v] : r.info) out << "- " << k << ": " << v << "\n";
    return out.str();
}

std::string bratteli_dot(const IntMatrix& m) {
    std::ostringstream out;
    out << "graph bratteli {\n  rankdir=LR;\n";
    for (std::size_t i = 0; i < m.rows(); ++i)
        out << "  b" << i << " [shape=box, label=\"B" << i << "\"];\n";
    for (std::size_t j = 0; j < m.cols(); ++j)
        out << "  a" << j << " [shape=circle, label=\"A" << j << "\"];\n";
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m.at(i, j) == 0) continue;
            out << "  b" << i << " -- a" << j;
            if (m.at(i, j) != 1) out << " [label=\"" << m.at(i, j).get_str() << "\"]";
            out << ";\n";
        }
    out << "}\n";
    return out.str();
}

std::string dump_stable(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace depth
