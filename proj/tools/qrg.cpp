// qrg: build the rank-two quaternionic reflection groups, list their
// reflections and systems of imprimitivity, regenerate the catalog tables
// and run the verification suite.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "qrg/catalog.hpp"
#include "qrg/kernels.hpp"

using namespace qrg;
using nlohmann::json;

namespace {

std::vector<Rat> parse_samples(const std::string& csv) {
    std::vector<Rat> out;
    std::istringstream is(csv);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(Rat::parse(tok));
    return out;
}

int cmd_build(const std::string& descriptor, bool elements, const Config& cfg) {
    BuiltGroup g = build_group(descriptor);
    std::cout << group_record_json(g) << "\n";
    if (elements && g.desc().kind != GroupDesc::Kind::SG) {
        std::string key = "elements_" + g.desc().str();
        std::optional<MatGroupSet> cached = cache_load(cfg.cache_dir, key);
        MatGroupSet mats = cached ? std::move(*cached) : g.matgroup();
        if (!cached) cache_store(cfg.cache_dir, key, mats);
        std::vector<std::string> lines;
        lines.reserve(mats.order());
        for (const QMat2& m : mats.elements()) lines.push_back(m.str());
        std::sort(lines.begin(), lines.end());
        for (const std::string& l : lines) std::cout << l << "\n";
    }
    return 0;
}

int cmd_reflections(const std::string& descriptor) {
    BuiltGroup g = build_group(descriptor);
    json j;
    j["descriptor"] = g.desc().str();
    j["reflection_count"] = g.reflection_count();
    j["reflection_orders"] = g.reflection_orders();
    j["generated_by_reflections"] = g.is_reflection_group();
    json list = json::array();
    MatGroupSet mats = g.matgroup();
    for (int idx : mats.reflection_indices()) {
        ReflectionInfo info = quat_is_reflection(mats.element(idx));
        json r;
        r["matrix"] = mats.element(idx).str();
        r["order"] = info.order;
        r["root"] = "(" + info.root[0].str() + "," + info.root[1].str() + ")";
        list.push_back(r);
    }
    j["reflections"] = list;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_soi(const std::string& descriptor, const std::vector<Rat>& samples,
            const std::string& mode) {
    GroupDesc desc = GroupDesc::parse(descriptor);
    BuiltGroup g = build_group(desc);
    SoiMode m = mode == "full" ? SoiMode::Full : SoiMode::Generators;
    json j;
    j["group"] = desc.str();
    json systems = json::array();
    bool classified = true;
    try {
        SoiClassification cls = soi_classify(desc);
        for (const SoiSystem& sys : cls.systems) {
            json s;
            if (sys.direction == "1") {
                s["u"] = "(1,1)";
                s["v"] = "(1,-1)";
            } else if (sys.kind == SoiSystem::Kind::Family) {
                s["u"] = "(1,r*" + sys.direction + ")";
                s["v"] = "(r*" + sys.direction + ",1)";
            } else {
                SoI inst = sys.instantiate();
                s["u"] = "(" + inst.first.u[0].str() + "," + inst.first.u[1].str() + ")";
                s["v"] = "(" + inst.second.u[0].str() + "," + inst.second.u[1].str() + ")";
            }
            s["kind"] = sys.kind == SoiSystem::Kind::Family ? "family" : "concrete";
            s["direction"] = sys.direction;
            if (sys.kind == SoiSystem::Kind::Concrete) {
                s["verified"] = soi_preserved(g, sys.instantiate(), m);
            } else {
                bool ok = true;
                for (const Rat& q : samples)
                    if (!q.is_zero()) ok = ok && soi_preserved(g, sys.instantiate(q), m);
                s["verified"] = ok;
            }
            systems.push_back(s);
        }
    } catch (const UnknownFamily&) {
        classified = false;
        for (const FoundSoI& f : soi_search_structured(g, samples, m)) {
            json s;
            s["u"] = "(" + f.s.first.u[0].str() + "," + f.s.first.u[1].str() + ")";
            s["v"] = "(" + f.s.second.u[0].str() + "," + f.s.second.u[1].str() + ")";
            s["kind"] = "concrete";
            s["direction"] = f.label;
            s["verified"] = true;
            systems.push_back(s);
        }
    }
    j["classified"] = classified;
    j["systems"] = systems;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_conj(const std::string& tag, int max_m, const std::string& rs_csv) {
    std::vector<Rat> rs{Rat(1), Rat(1, 2), Rat(2)};
    if (!rs_csv.empty()) rs = parse_samples(rs_csv);
    TheoremReport rep = verify_conjugacy_theorem(tag, max_m, rs);
    json j;
    j["theorem"] = rep.theorem;
    j["pass"] = rep.pass;
    json list = json::array();
    for (const TheoremInstance& inst : rep.instances) {
        json i;
        i["params"] = inst.params;
        i["witnesses"] = inst.witnesses;
        i["pass"] = inst.pass;
        if (!inst.detail.empty()) i["detail"] = inst.detail;
        list.push_back(i);
    }
    j["instances"] = list;
    std::cout << j.dump(2) << "\n";
    return rep.pass ? 0 : 1;
}

int cmd_table(int which, const Config& cfg) {
    std::vector<CatalogEntry> entries = emit_table(which, cfg);
    if (cfg.output == "markdown") {
        std::cout << render_markdown(entries);
    } else {
        for (const CatalogEntry& e : entries) std::cout << e.to_json() << "\n";
    }
    return 0;
}

int cmd_verify(const Config& cfg) {
    SuiteReport rep = verify_suite(cfg);
    std::cout << rep.to_json() << "\n";
    return rep.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rank-two quaternionic reflection groups"};
    app.require_subcommand(1);

    Config cfg = Config::from_env();
    std::string config_file;
    app.add_option("--config", config_file, "key=value configuration file");

    std::string descriptor;
    bool elements = false;
    CLI::App* build = app.add_subcommand("build", "construct a group and print its record");
    build->add_option("descriptor", descriptor, "group descriptor")->required();
    build->add_flag("--elements", elements, "also print the sorted element list");

    std::string refl_desc;
    CLI::App* refl = app.add_subcommand("reflections", "list the reflections of a group");
    refl->add_option("descriptor", refl_desc, "group descriptor")->required();

    std::string soi_group, soi_samples_csv = "1,-1,1/2,-1/2,2/3", soi_mode = "generators";
    CLI::App* soi = app.add_subcommand("soi", "systems of imprimitivity");
    soi->add_option("--group", soi_group, "group descriptor")->required();
    soi->add_option("--samples", soi_samples_csv, "rational samples for families");
    soi->add_option("--mode", soi_mode, "generators|full")
        ->check(CLI::IsMember({"generators", "full"}));

    std::string theorem_tag, conj_rs;
    int conj_m = 8;
    CLI::App* conj = app.add_subcommand("conj", "verify a conjugacy theorem");
    conj->add_option("--theorem", theorem_tag, "theorem tag")->required();
    conj->add_option("--m", conj_m, "dihedral parameter bound");
    conj->add_option("--r", conj_rs, "rational samples, comma separated");

    int which = 0;
    CLI::App* table = app.add_subcommand("table", "regenerate a paper table");
    table->add_option("--which", which, "table number 1..5")->required();
    table->add_option("--max-m", cfg.max_m, "parameter bound for table rows");
    std::string out_fmt;
    table->add_option("--output", out_fmt, "json|markdown");

    CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--max-m", cfg.max_m, "dihedral parameter bound");
    verify->add_option("--closure-cap", cfg.closure_cap, "element count cap");
    std::string verify_samples;
    verify->add_option("--samples", verify_samples, "soi samples, comma separated");

    try {
        app.parse(argc, argv);
        if (!config_file.empty()) cfg.apply_file(config_file);
        if (!out_fmt.empty()) cfg.apply_kv("output", out_fmt);
        if (!verify_samples.empty()) cfg.soi_samples = parse_samples(verify_samples);

        if (build->parsed()) return cmd_build(descriptor, elements, cfg);
        if (refl->parsed()) return cmd_reflections(refl_desc);
        if (soi->parsed()) return cmd_soi(soi_group, parse_samples(soi_samples_csv), soi_mode);
        if (conj->parsed()) return cmd_conj(theorem_tag, conj_m, conj_rs);
        if (table->parsed()) return cmd_table(which, cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        return 2;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidDescriptor& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidParams& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
