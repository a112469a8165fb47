// Command-line front end: validate configurations, export quivers and
// relation sets, compute Cartan matrices and dimension reports, enumerate
// subgroup lattices, and run the identity verification sweeps.
//
// Exit codes: 0 success (all verdicts pass), 1 domain violation or failed
// verdict, 2 I/O, parse or usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "brauer/configuration.hpp"
#include "brauer/group.hpp"
#include "brauer/group_identities.hpp"
#include "brauer/lattice.hpp"
#include "brauer/quiver.hpp"
#include "brauer/relations.hpp"
#include "brauer/repr_theory.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw brauer::ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw brauer::ParseError("cannot write '" + out_path + "'");
    out << text;
}

std::string verdict_line(const brauer::IdentityVerdict& v) {
    std::ostringstream out;
    out << v.name << ": " << (v.holds ? "PASS" : "FAIL");
    if (!v.sides.empty()) {
        out << " [";
        for (std::size_t i = 0; i < v.sides.size(); ++i) {
            if (i)
                out << " = ";
            out << v.sides[i];
        }
        out << "]";
    }
    if (!v.note.empty())
        out << " (" << v.note << ")";
    return out.str();
}

int print_report(const brauer::VerificationReport& report, const std::string& out_path) {
    std::ostringstream out;
    for (const auto& v : report.verdicts)
        out << verdict_line(v) << "\n";
    emit(out_path, out.str());
    return report.all_hold() ? 0 : 1;
}

std::map<std::string, std::int64_t> mu_overrides(const std::string& path) {
    auto doc = nlohmann::json::parse(read_file(path), nullptr, false);
    if (doc.is_discarded() || !doc.is_object())
        throw brauer::ParseError("mu file must be a JSON object of element names to integers");
    std::map<std::string, std::int64_t> out;
    for (const auto& [name, value] : doc.items()) {
        if (!value.is_number_integer())
            throw brauer::ParseError("mu value for '" + name + "' must be an integer");
        out[name] = value.get<std::int64_t>();
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Brauer configuration algebra toolkit"};
    app.require_subcommand(1);

    std::string config_path, out_path, format = "grid", mu_path;
    std::uint64_t seed = 0;
    int bound = 64;
    std::int64_t zn_n = 1;
    std::vector<std::string> group_args;

    auto* cmd_validate = app.add_subcommand("validate", "check a configuration file");
    cmd_validate->add_option("config", config_path, "configuration JSON file")->required();

    auto* cmd_quiver = app.add_subcommand("quiver", "export the induced quiver as DOT");
    cmd_quiver->add_option("config", config_path)->required();
    cmd_quiver->add_option("--out", out_path, "write to a file instead of stdout");

    auto* cmd_cartan = app.add_subcommand("cartan", "print the Cartan matrix");
    cmd_cartan->add_option("config", config_path)->required();
    cmd_cartan->add_option("--format", format, "grid or csv")
        ->check(CLI::IsMember({"grid", "csv"}));
    cmd_cartan->add_option("--out", out_path);

    auto* cmd_report = app.add_subcommand("report", "dimension report as JSON");
    cmd_report->add_option("config", config_path)->required();
    cmd_report->add_option("--out", out_path);

    auto* cmd_relations = app.add_subcommand("relations", "export the defining relations");
    cmd_relations->add_option("config", config_path)->required();
    cmd_relations->add_option("--out", out_path);

    auto* cmd_group = app.add_subcommand(
        "group", "subgroup lattice tools: <spec...> {lattice|occ|induce|verify}");
    cmd_group->add_option("spec", group_args, "group spec tokens then an action")->required();
    cmd_group->add_option("--mu", mu_path, "JSON file of element multiplicities (induce)");
    cmd_group->add_option("--seed", seed, "seed for the random weight trials");
    cmd_group->add_option("--bound", bound, "subgroup enumeration order bound");
    cmd_group->add_option("--out", out_path);

    auto* cmd_zn = app.add_subcommand("zn", "divisor identities of the cyclic group");
    cmd_zn->add_option("n", zn_n, "group order")->required();
    cmd_zn->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(cmd_validate)) {
            auto cfg = brauer::configuration_from_json(read_file(config_path));
            auto report = brauer::validate(cfg);
            std::cout << report.to_string();
            return report.ok() ? 0 : 1;
        }

        if (app.got_subcommand(cmd_quiver)) {
            auto cfg = brauer::configuration_from_json(read_file(config_path));
            emit(out_path, brauer::Quiver::build(cfg).to_dot());
            return 0;
        }

        if (app.got_subcommand(cmd_cartan)) {
            auto cfg = brauer::configuration_from_json(read_file(config_path));
            auto matrix = brauer::cartan_matrix(cfg);
            emit(out_path, format == "csv" ? matrix.to_csv() : matrix.to_grid());
            return 0;
        }

        if (app.got_subcommand(cmd_report)) {
            auto cfg = brauer::configuration_from_json(read_file(config_path));
            emit(out_path, brauer::report_to_json(brauer::dimension_report(cfg)));
            return 0;
        }

        if (app.got_subcommand(cmd_relations)) {
            auto cfg = brauer::configuration_from_json(read_file(config_path));
            auto quiver = brauer::Quiver::build(cfg);
            emit(out_path, brauer::relations_text(quiver, brauer::relations(quiver)));
            return 0;
        }

        if (app.got_subcommand(cmd_group)) {
            if (group_args.size() < 2)
                throw brauer::ParseError(
                    "group needs a spec and an action (lattice|occ|induce|verify)");
            std::string action = group_args.back();
            std::vector<std::string> spec(group_args.begin(), group_args.end() - 1);

            brauer::FiniteGroup g;
            if (spec.front() == "file") {
                if (spec.size() != 2)
                    throw brauer::ParseError("group file <path> <action>");
                g = brauer::group_from_json(read_file(spec[1]));
            } else {
                g = brauer::group_from_spec(spec);
            }
            auto lattice = brauer::subgroup_lattice(g, bound);

            if (action == "lattice") {
                emit(out_path, brauer::lattice_text(g, lattice));
                return 0;
            }
            if (action == "occ") {
                emit(out_path, brauer::occurrence_table_text(g, lattice));
                return 0;
            }
            if (action == "induce") {
                auto mu = mu_path.empty() ? brauer::constant_mu(g)
                                          : brauer::mu_from_map(g, mu_overrides(mu_path));
                auto induced = brauer::induced_configuration(g, lattice, mu);
                if (induced.prime_degenerate) {
                    nlohmann::ordered_json doc;
                    doc["degenerate"] = true;
                    doc["reason"] = "prime order with constant multiplicity 1";
                    doc["algebra"] = "K[x]/(x^2)";
                    doc["center_dim"] = 2;
                    emit(out_path, doc.dump(2) + "\n");
                } else {
                    emit(out_path, brauer::configuration_to_json(*induced.config));
                }
                return 0;
            }
            if (action == "verify") {
                auto report = brauer::verify_group(g, lattice, seed, 50);
                bool cyclic = false;
                for (int x = 0; x < g.order; ++x)
                    if (g.element_order[x] == g.order)
                        cyclic = true;
                if (cyclic) {
                    auto zn = brauer::cyclic_identities(g.order);
                    for (auto& v : zn.verdicts)
                        report.verdicts.push_back(std::move(v));
                }
                return print_report(report, out_path);
            }
            throw brauer::ParseError("unknown group action '" + action + "'");
        }

        if (app.got_subcommand(cmd_zn)) {
            return print_report(brauer::cyclic_identities(zn_n), out_path);
        }
    } catch (const brauer::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const brauer::BrauerError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
