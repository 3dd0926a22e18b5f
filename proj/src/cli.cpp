#include "slsc/cli.hpp"

#include "slsc/checker.hpp"
#include "slsc/equivalence.hpp"
#include "slsc/error.hpp"
#include "slsc/io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>

namespace slsc {

namespace {

using nlohmann::json;

const std::map<std::string, AdjacencyKind> adjacency_names = {
    {"lower", AdjacencyKind::lower},
    {"upper", AdjacencyKind::upper},
    {"spatial", AdjacencyKind::spatial},
};

const std::map<std::string, Equivalence> relation_names = {
    {"bisim", Equivalence::bisimulation},
    {"branching", Equivalence::branching},
};

json simplex_json(const Simplex& s) { return s.vertices(); }

Simplex parse_simplex_arg(const std::string& text)
{
    std::vector<VertexId> vs;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        vs.push_back(text.substr(start, comma - start));
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return make_simplex(std::move(vs));
}

struct Options {
    std::string model;
    std::string model_b;
    std::string formula;
    std::string simplex;
    std::string kind_name;
    std::string relation_name;
    AdjacencyKind kind = AdjacencyKind::lower;
    Equivalence relation = Equivalence::bisimulation;
    bool json = false;
    bool explain = false;
};

int cmd_validate(const Options& o, std::ostream& out)
{
    const auto text = read_text_file(o.model);
    const auto problems = validate_document(text);
    if (o.json) {
        out << json{{"valid", problems.empty()}, {"diagnostics", problems}}.dump() << '\n';
    } else if (problems.empty()) {
        out << "valid\n";
    } else {
        for (const auto& p : problems) {
            out << p << '\n';
        }
    }
    return problems.empty() ? exit_ok : exit_false;
}

int cmd_check(const Options& o, std::ostream& out)
{
    const auto model = load_model_file(o.model);
    const auto formula = parse_formula(o.formula);
    const auto simplices = model.complex().to_simplices(sat(model, formula, o.kind));
    if (o.json) {
        json arr = json::array();
        for (const auto& s : simplices) {
            arr.push_back(simplex_json(s));
        }
        out << arr.dump() << '\n';
    } else {
        for (const auto& s : simplices) {
            out << s << '\n';
        }
    }
    return exit_ok;
}

int cmd_holds(const Options& o, std::ostream& out)
{
    const auto model = load_model_file(o.model);
    const auto formula = parse_formula(o.formula);
    const auto s = parse_simplex_arg(o.simplex);
    const bool holds = check(model, s, formula, o.kind);
    if (o.json) {
        out << json{{"simplex", simplex_json(s)}, {"holds", holds}}.dump() << '\n';
    } else {
        out << (holds ? "true" : "false") << '\n';
    }
    return holds ? exit_ok : exit_false;
}

int cmd_equiv(const Options& o, std::ostream& out)
{
    const auto m1 = load_model_file(o.model);
    const auto m2 = load_model_file(o.model_b);
    const bool same = models_equivalent(m1, m2, o.relation, o.kind);

    json unmatched = json::array();
    std::vector<std::string> lines;
    if (!same && o.explain) {
        if (o.relation == Equivalence::bisimulation) {
            for (const auto& u : explain_unmatched(m1, m2, o.kind)) {
                const auto side = u.side == 1 ? "a" : "b";
                unmatched.push_back({{"model", side}, {"simplex", simplex_json(u.simplex)},
                                     {"formula", render(u.witness)}});
                lines.push_back(std::string(side) + " " + u.simplex.to_string() + ": " + render(u.witness));
            }
        } else {
            const auto rel = equivalence_relation(m1, m2, o.relation, o.kind);
            std::set<Simplex> left;
            std::set<Simplex> right;
            for (const auto& [a, b] : rel) {
                left.insert(a);
                right.insert(b);
            }
            auto report = [&](const SimplicialModel& m, const std::set<Simplex>& hit, const char* side) {
                for (const auto& s : m.complex().simplices()) {
                    if (hit.count(s) == 0) {
                        unmatched.push_back({{"model", side}, {"simplex", simplex_json(s)}});
                        lines.push_back(std::string(side) + " " + s.to_string());
                    }
                }
            };
            report(m1, left, "a");
            report(m2, right, "b");
        }
    }

    const std::string verdict = same ? "equivalent" : "not equivalent";
    if (o.json) {
        json doc{{"relation", std::string(to_string(o.relation))},
                 {"adjacency", std::string(to_string(o.kind))},
                 {"equivalent", same}};
        if (o.explain) {
            doc["unmatched"] = unmatched;
        }
        out << doc.dump() << '\n';
    } else {
        out << verdict << '\n';
        for (const auto& l : lines) {
            out << l << '\n';
        }
    }
    return same ? exit_ok : exit_false;
}

int cmd_classes(const Options& o, std::ostream& out)
{
    const auto model = load_model_file(o.model);
    const auto classes = equivalence_classes(model, o.relation, o.kind);
    if (o.json) {
        json arr = json::array();
        for (const auto& cls : classes) {
            json members = json::array();
            for (const auto& s : cls) {
                members.push_back(simplex_json(s));
            }
            arr.push_back(std::move(members));
        }
        out << arr.dump() << '\n';
    } else {
        for (const auto& cls : classes) {
            for (std::size_t i = 0; i < cls.size(); ++i) {
                out << (i == 0 ? "" : " ") << cls[i];
            }
            out << '\n';
        }
    }
    return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Model checking and equivalence for simplicial models", "slsc"};
    app.require_subcommand(1);
    Options o;

    auto add_adjacency = [&](CLI::App* sub) {
        sub->add_option("--adjacency", o.kind_name, "lower, upper or spatial")
            ->required()
            ->check(CLI::IsMember(adjacency_names));
    };
    auto add_relation = [&](CLI::App* sub) {
        sub->add_option("--relation", o.relation_name, "bisim or branching")
            ->required()
            ->check(CLI::IsMember(relation_names));
    };

    auto* validate = app.add_subcommand("validate", "Check a model file");
    validate->add_option("model", o.model, "Model file")->required();
    validate->add_flag("--json", o.json, "JSON output");

    auto* check_cmd = app.add_subcommand("check", "Print the simplices satisfying a formula");
    check_cmd->add_option("--model", o.model, "Model file")->required();
    check_cmd->add_option("--formula", o.formula, "Formula")->required();
    add_adjacency(check_cmd);
    check_cmd->add_flag("--json", o.json, "JSON output");

    auto* holds = app.add_subcommand("holds", "Decide whether one simplex satisfies a formula");
    holds->add_option("--model", o.model, "Model file")->required();
    holds->add_option("--simplex", o.simplex, "Comma-separated vertices")->required();
    holds->add_option("--formula", o.formula, "Formula")->required();
    add_adjacency(holds);
    holds->add_flag("--json", o.json, "JSON output");

    auto* equiv = app.add_subcommand("equiv", "Compare two models");
    equiv->add_option("--model-a", o.model, "First model file")->required();
    equiv->add_option("--model-b", o.model_b, "Second model file")->required();
    add_relation(equiv);
    add_adjacency(equiv);
    equiv->add_flag("--explain", o.explain, "List simplices without a counterpart");
    equiv->add_flag("--json", o.json, "JSON output");

    auto* classes = app.add_subcommand("classes", "Print the equivalence classes of a model");
    classes->add_option("--model", o.model, "Model file")->required();
    add_relation(classes);
    add_adjacency(classes);
    classes->add_flag("--json", o.json, "JSON output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        err << "run with --help for usage\n";
        return exit_usage;
    }

    if (!o.kind_name.empty()) {
        o.kind = adjacency_names.at(o.kind_name);
    }
    if (!o.relation_name.empty()) {
        o.relation = relation_names.at(o.relation_name);
    }

    try {
        if (validate->parsed()) return cmd_validate(o, out);
        if (check_cmd->parsed()) return cmd_check(o, out);
        if (holds->parsed()) return cmd_holds(o, out);
        if (equiv->parsed()) return cmd_equiv(o, out);
        if (classes->parsed()) return cmd_classes(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    }
    return exit_usage;
}

} // namespace slsc
