// Command-line front end: model inspection, charge transforms, exact-identity
// verification suites, and moduli-dimension formulas. All output is JSON or
// plain text with rationals printed as p/q; exit codes: 0 success, 2 usage or
// input error, 3 verified-identity failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <unistd.h>

#include <CLI11.hpp>

#include "fmcy/fmcy.hpp"

namespace {

using namespace fmcy;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIdentityFailure = 3;

bool use_color() {
    if (std::getenv("NO_COLOR"))
        return false;
    return isatty(fileno(stdout));
}

std::string pass_str(bool pass) {
    if (!use_color())
        return pass ? "PASS" : "FAIL";
    return pass ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
}

Json read_json_input(const std::string& path) {
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return Json::parse(ss.str());
    }
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

/// Loads extra geometries / models from a config file:
/// { "geometries": { name: base-surface }, "models": { name: model } }.
void load_config(ModelRegistry& registry, std::map<std::string, Geometry>& geometries,
                 const std::string& path) {
    Json j = read_json_input(path);
    if (j.contains("geometries"))
        for (const auto& [name, geo] : j.at("geometries").items())
            geometries.emplace(name, Geometry(base_surface_from_json(geo)));
    if (j.contains("models"))
        for (const auto& [name, m] : j.at("models").items())
            registry.add(model_from_json(m));
}

int cmd_model(const ModelRegistry& registry, const std::string& action,
              const std::string& name, bool as_json) {
    if (action == "list") {
        if (as_json) {
            Json j = registry.names();
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& n : registry.names())
                std::cout << n << "\n";
        }
        return kExitOk;
    }
    const ModelDefinition& m = registry.at(name);
    if (as_json) {
        std::cout << to_json(m).dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "model " << m.name << (m.elliptic ? " (elliptic fibration)" : " (K3 fibration)")
              << "\n";
    std::cout << "  H = E + " << m.h_coeff << "L\n";
    std::cout << "  E^3 = " << m.E3 << ", E^2L = " << m.E2L << ", EL^2 = " << m.EL2
              << ", L^3 = " << m.L3 << "\n";
    std::cout << "  c2.E = " << m.c2E << ", c2.L = " << m.c2L << "\n";
    std::cout << "  curve basis: (" << m.curve_basis[0] << ", " << m.curve_basis[1] << ")\n";
    std::cout << "  prepotential: " << m.prepotential.str() << "\n";
    if (m.geometry) {
        std::cout << "  base surface: ";
        for (const auto& l : m.geometry->base().basis_labels)
            std::cout << l << " ";
        std::cout << "(c1 = " << to_json(m.geometry->c1()).dump()
                  << ", c2 = " << m.geometry->c2() << ")\n";
    } else {
        std::cout << "  K3 section self-intersection: " << m.k3_section_self_intersection
                  << "\n";
    }
    std::cout << "  dictionary (BPS -> Chern): ";
    Json dict = Json::array();
    for (int i = 0; i < 6; ++i) {
        std::vector<Rational> e(6);
        e[i] = 1;
        ChernData q = bps_to_chern(m, BPSCharge::from_vec(e));
        dict.push_back(Json::array({to_json(q.rank), to_json(q.c1_e), to_json(q.c1_l),
                                    to_json(q.c2_a), to_json(q.c2_b), to_json(q.c3)}));
    }
    std::cout << dict.dump() << "\n";
    for (const auto& [key, mat] : m.matrices) {
        std::cout << "  " << key << " =\n";
        std::istringstream rows(mat.str());
        std::string line;
        while (std::getline(rows, line))
            std::cout << "    " << line << "\n";
    }
    return kExitOk;
}

int cmd_fm(const ModelRegistry& registry, const std::map<std::string, Geometry>& geometries,
           const std::string& model, const std::string& direction, const std::string& charge_path,
           bool twisted, bool oracle, bool verify_m) {
    Json doc_json = read_json_input(charge_path);
    if (!model.empty()) // --model overrides / supplies the document geometry
        doc_json["geometry"] = model;
    if (doc_json.contains("geometry") && doc_json.at("geometry").is_string()) {
        std::string ref = doc_json.at("geometry").get<std::string>();
        auto it = geometries.find(ref);
        if (!registry.has(ref) && it != geometries.end())
            doc_json["geometry"] = to_json(it->second.base());
    }
    ChargeDocument doc = charge_document_from_json(doc_json, registry);

    if (verify_m && !doc.charge.x().is_zero()) {
        std::cerr << "error: the duality identities require a charge fibrewise of degree 0\n";
        return kExitUsage;
    }

    bool forward = direction == "forward";
    VerticalClass out = forward ? fm_forward(doc.charge) : fm_inverse(doc.charge);

    Json j;
    j["direction"] = direction;
    j["input"] = to_json(doc);
    j["output"] = to_json(out);
    if (twisted) {
        j["twisted_input"] = to_json(twisted_charge(doc.charge, 0).value);
        j["twisted_output"] = to_json(twisted_charge(out, 1).value);
    }
    bool ok = true;
    if (oracle) {
        VerticalClass check =
            forward ? grr_transform(doc.charge, ch_poincare(doc.geometry), Direction::forward)
                    : grr_transform(doc.charge, poincare_inverse_kernel(doc.geometry),
                                    Direction::inverse);
        ok = check == out;
        j["oracle_match"] = ok;
    }
    if (verify_m) {
        MRelationsReport rel = verify_m_relations(doc.charge);
        j["m_relations"] = {{"td_times_inverse", rel.td_times_inverse},
                            {"td_inv_times_forward", rel.td_inv_times_forward},
                            {"twisted_charges", rel.twisted_charges}};
        ok = ok && rel.all();
    }
    std::cout << j.dump(2) << "\n";
    return ok ? kExitOk : kExitIdentityFailure;
}

int cmd_verify(const ModelRegistry& registry, const std::string& suite, bool as_json,
               std::uint64_t seed, int samples) {
    VerifyOptions opt;
    opt.seed = seed;
    if (samples > 0) {
        opt.oracle_samples = samples;
        opt.relation_samples = samples;
        opt.property_samples = samples;
    }
    std::vector<SuiteResult> results;
    if (suite == "all")
        results = run_all_suites(registry, opt);
    else
        results.push_back(run_suite(suite, registry, opt));
    bool all_pass = true;
    Json out = Json::array();
    for (const auto& r : results) {
        all_pass = all_pass && r.pass();
        if (as_json) {
            out.push_back(to_json(r.report, r.suite));
        } else {
            std::cout << pass_str(r.pass()) << " suite " << r.suite << "\n";
            for (const auto& id : r.report.identities) {
                std::cout << "  " << pass_str(id.pass) << (id.informational ? " [status]" : "")
                          << " " << id.name;
                if (!id.detail.empty())
                    std::cout << "  (" << id.detail << ")";
                std::cout << "\n";
            }
        }
    }
    if (as_json)
        std::cout << out.dump(2) << "\n";
    return all_pass ? kExitOk : kExitIdentityFailure;
}

int cmd_moduli(const ModelRegistry& registry, const std::string& model,
               const std::string& bps_arg, const std::string& fmw_arg) {
    const ModelDefinition& m = registry.at(model);
    BPSCharge n;
    Json j;
    if (!fmw_arg.empty()) {
        auto comma = fmw_arg.find(',');
        if (comma == std::string::npos)
            throw ParseError("--fmw expects n,a");
        long long rank = std::stoll(fmw_arg.substr(0, comma));
        long long a = std::stoll(fmw_arg.substr(comma + 1));
        n = fmw_bps_dictionary(rank, a);
        j["dictionary"] = to_json(n);
    } else {
        Json arr = Json::parse(bps_arg.front() == '[' ? bps_arg : "[" + bps_arg + "]");
        std::vector<Rational> v;
        for (const auto& x : arr)
            v.push_back(rational_from_json(x));
        n = BPSCharge::from_vec(v);
    }
    j["bps"] = to_json(n);
    j["dimension"] = to_json(dim_moduli_deg18(n));
    j["integrability_constraint"] = duy_constraint(m, n).str();
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact charge-lattice calculus for fibrewise duality on elliptic "
                 "Calabi-Yau threefolds"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "JSON config with extra geometries/models");

    auto* model_cmd = app.add_subcommand("model", "inspect registered models");
    std::string model_action = "list", model_name;
    bool model_json = false;
    model_cmd->add_option("action", model_action, "list | show")->required();
    model_cmd->add_option("name", model_name, "model name (for show)");
    model_cmd->add_flag("--json", model_json, "machine-readable output");

    auto* fm_cmd = app.add_subcommand("fm", "transform a charge document");
    std::string fm_model, fm_direction = "forward", fm_charge;
    bool fm_twisted = false, fm_oracle = false, fm_verify_m = false;
    fm_cmd->add_option("--model", fm_model, "registered model supplying the geometry");
    fm_cmd->add_option("--direction", fm_direction, "forward | inverse")
        ->check(CLI::IsMember({"forward", "inverse"}));
    fm_cmd->add_option("--charge", fm_charge, "charge document file, or - for stdin")
        ->required();
    fm_cmd->add_flag("--twisted-charge", fm_twisted, "also emit the twisted charges");
    fm_cmd->add_flag("--oracle", fm_oracle, "re-run through the pushforward engine");
    fm_cmd->add_flag("--verify-m", fm_verify_m, "check the duality identities (degree 0 only)");

    auto* verify_cmd = app.add_subcommand("verify", "run exact-identity suites");
    std::string suite = "all", mutate_spec;
    bool verify_json = false;
    std::uint64_t seed = VerifyOptions{}.seed;
    int samples = 0;
    verify_cmd->add_option("suite", suite, "suite name or 'all'");
    verify_cmd->add_flag("--json", verify_json, "machine-readable report");
    verify_cmd->add_option("--seed", seed, "random seed for the property samples");
    verify_cmd->add_option("--samples", samples, "override per-suite sample counts");
    verify_cmd->add_option("--mutate", mutate_spec,
                           "model:matrix:row:col[:delta] sensitivity perturbation");
    verify_cmd->add_flag("--list", "list suite names");

    auto* moduli_cmd = app.add_subcommand("moduli", "moduli-dimension formulas");
    std::string moduli_model = "deg18", bps_arg, fmw_arg;
    moduli_cmd->add_option("--model", moduli_model, "model (deg18)");
    moduli_cmd->add_option("--bps", bps_arg, "BPS vector n6,n4_1,n4_2,n0,n2_1,n2_2");
    moduli_cmd->add_option("--fmw", fmw_arg, "spectral dictionary input n,a");

    CLI11_PARSE(app, argc, argv);

    try {
        fmcy::ModelRegistry registry = fmcy::ModelRegistry::standard();
        std::map<std::string, fmcy::Geometry> geometries;
        if (!config_path.empty())
            load_config(registry, geometries, config_path);

        if (model_cmd->parsed()) {
            if (model_action != "list" && model_action != "show") {
                std::cerr << "error: unknown action " << model_action << "\n";
                return kExitUsage;
            }
            if (model_action == "show" && model_name.empty()) {
                std::cerr << "error: show needs a model name\n";
                return kExitUsage;
            }
            return cmd_model(registry, model_action, model_name, model_json);
        }
        if (fm_cmd->parsed())
            return cmd_fm(registry, geometries, fm_model, fm_direction, fm_charge, fm_twisted,
                          fm_oracle, fm_verify_m);
        if (verify_cmd->parsed()) {
            if (verify_cmd->count("--list")) {
                for (const auto& n : fmcy::suite_names())
                    std::cout << n << "\n";
                return kExitOk;
            }
            if (!mutate_spec.empty()) {
                std::vector<std::string> parts;
                std::stringstream ss(mutate_spec);
                std::string part;
                while (std::getline(ss, part, ':'))
                    parts.push_back(part);
                if (parts.size() < 4)
                    throw fmcy::ParseError("--mutate expects model:matrix:row:col[:delta]");
                fmcy::Rational delta =
                    parts.size() > 4 ? fmcy::Rational::parse(parts[4]) : fmcy::Rational(1);
                registry.mutate(parts[0], parts[1], std::stoul(parts[2]), std::stoul(parts[3]),
                                delta);
            }
            return cmd_verify(registry, suite, verify_json, seed, samples);
        }
        if (moduli_cmd->parsed()) {
            if (bps_arg.empty() == fmw_arg.empty()) {
                std::cerr << "error: pass exactly one of --bps or --fmw\n";
                return kExitUsage;
            }
            return cmd_moduli(registry, moduli_model, bps_arg, fmw_arg);
        }
        return kExitUsage;
    } catch (const fmcy::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed document: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
