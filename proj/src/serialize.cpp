#include "hilbpieri/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace hilb {

Json to_json(const Partition& p)
{
    return Json(p.vec());
}

Partition partition_from_json(const Json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("partition must be a JSON array");
    return Partition(j.get<std::vector<int>>());
}

Json to_json(const MSTriple& t)
{
    return Json{{"a", to_json(t.a)}, {"b", to_json(t.b)}, {"c", to_json(t.c)}};
}

MSTriple triple_from_json(const Json& j)
{
    return MSTriple(partition_from_json(j.at("a")), partition_from_json(j.at("b")), partition_from_json(j.at("c")));
}

Json to_json(const PieriRow& row)
{
    Json terms = Json::array();
    for (const auto& [t, c] : row.output) {
        Json term = to_json(t);
        term["coef"] = c;
        terms.push_back(std::move(term));
    }
    return Json{
        {"n", row.input.n()},
        {"input", to_json(row.input)},
        {"terms", std::move(terms)},
        {"stats", {{"rule_applications", row.rule_applications}, {"max_terms", row.max_terms}}},
    };
}

PieriRow row_from_json(const Json& j)
{
    PieriRow row;
    row.input = triple_from_json(j.at("input"));
    if (j.at("n").get<int>() != row.input.n())
        throw std::invalid_argument("row n does not match its input triple");
    for (const auto& term : j.at("terms"))
        row.output.emplace_back(triple_from_json(term), term.at("coef").get<Coef>());
    if (j.contains("stats")) {
        row.rule_applications = j["stats"].value("rule_applications", std::size_t{0});
        row.max_terms = j["stats"].value("max_terms", std::size_t{0});
    }
    return row;
}

Json matrix_to_json(int n, const std::vector<PieriRow>& rows)
{
    Json out = Json::array();
    for (const auto& row : rows)
        out.push_back(to_json(row));
    return Json{{"n", n}, {"rows", std::move(out)}};
}

std::vector<PieriRow> matrix_from_json(const Json& j)
{
    std::vector<PieriRow> rows;
    for (const auto& row : j.at("rows"))
        rows.push_back(row_from_json(row));
    return rows;
}

Json to_json(const ConjectureReport& r)
{
    auto sums = [](const std::vector<NodeSum>& nodes) {
        Json out = Json::array();
        for (const auto& n : nodes)
            out.push_back(Json{{"lam", to_json(n.lam)}, {"sum", n.sum}});
        return out;
    };
    return Json{
        {"m", to_json(r.m)},
        {"i", r.i},
        {"allowed", sums(r.allowed)},
        {"excluded", sums(r.excluded)},
        {"pass", r.pass},
    };
}

std::string to_text(const PieriRow& row)
{
    std::ostringstream os;
    os << "H * sigma" << row.input.to_string() << " (N=" << row.input.n() << ")\n";
    if (row.output.empty())
        os << "  0\n";
    for (const auto& [t, c] : row.output)
        os << "  " << (c < 0 ? "- " : "+ ") << (c < 0 ? -c : c) << " " << t.to_string() << "\n";
    return os.str();
}

std::string to_latex(const PieriRow& row)
{
    std::ostringstream os;
    os << "H \\cdot " << row.input.to_latex() << " = ";
    if (row.output.empty())
        os << "0";
    bool first = true;
    for (const auto& [t, c] : row.output) {
        const Coef mag = c < 0 ? -c : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (mag != 1)
            os << mag;
        os << t.to_latex();
        first = false;
    }
    return os.str();
}

std::string dump_canonical(const Json& j)
{
    return j.dump(1) + "\n";
}

}  // namespace hilb
