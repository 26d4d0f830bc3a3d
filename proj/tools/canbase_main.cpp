// canbase: enumerate, count and check canonical basic set labels for Hecke
// algebras of classical Weyl groups, dump a-value tables, and verify the
// cyclotomic specialization identities.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "canbase/canbase.hpp"

namespace {

using nlohmann::json;

enum class Format { Text, Json, Csv, Latex };

Format parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "latex") return Format::Latex;
    throw CLI::ValidationError("--format", "expected one of text, json, csv, latex");
}

std::string default_format() {
    const char* env = std::getenv("CANBASE_FORMAT");
    return env ? env : "text";
}

json make_record(const std::string& command, json query) {
    return json{{"tool", "canbase"},
                {"version", CANBASE_VERSION},
                {"command", command},
                {"query", std::move(query)},
                {"canonical_order", true}};
}

void print_labels(const std::vector<canbase::BasicSetLabel>& labels, Format fmt,
                  json record, const std::string& caption) {
    switch (fmt) {
        case Format::Text:
            for (const auto& l : labels) std::cout << canbase::to_string(l) << "\n";
            break;
        case Format::Json: {
            json arr = json::array();
            for (const auto& l : labels) arr.push_back(canbase::to_string(l));
            record["payload"] = {{"labels", std::move(arr)}};
            std::cout << record.dump(2) << "\n";
            break;
        }
        case Format::Csv:
            std::cout << "index,label\n";
            for (std::size_t i = 0; i < labels.size(); ++i)
                std::cout << i << ",\"" << canbase::to_string(labels[i]) << "\"\n";
            break;
        case Format::Latex:
            std::cout << "\\begin{table}\n\\caption{" << caption << "}\n"
                      << "\\begin{tabular}{l}\n";
            for (const auto& l : labels)
                std::cout << "\\verb|" << canbase::to_string(l) << "| \\\\\n";
            std::cout << "\\end{tabular}\n\\end{table}\n";
            break;
    }
}

struct BasicSetArgs {
    std::string type;
    int n = 0;
    int e = 0;
    int characteristic = 0;
    std::string format = default_format();
    bool irr = false;  // count only
};

canbase::WeylType make_weyl_type(const BasicSetArgs& a) {
    return canbase::WeylType(canbase::parse_family(a.type), a.n);
}

void warn_if_degenerate(const canbase::WeylType& w) {
    if (w.degenerate())
        std::cerr << "warning: " << w.to_string()
                  << " is a degenerate (reducible) rank; labels are computed by the same rules\n";
}

int run_basic_set(const BasicSetArgs& a) {
    canbase::WeylType w = make_weyl_type(a);
    warn_if_degenerate(w);
    auto labels = canbase::basic_set_char_p(w, a.e, a.characteristic);
    json record = make_record("basic-set", {{"type", a.type},
                                            {"n", a.n},
                                            {"e", a.e},
                                            {"char", a.characteristic}});
    std::ostringstream caption;
    caption << "Basic set labels, type " << a.type << ", n=" << a.n << ", e=" << a.e
            << ", char=" << a.characteristic;
    print_labels(labels, parse_format(a.format), std::move(record), caption.str());
    return 0;
}

int run_count(const BasicSetArgs& a) {
    canbase::WeylType w = make_weyl_type(a);
    warn_if_degenerate(w);
    long long count;
    json query = {{"type", a.type}, {"n", a.n}, {"char", a.characteristic}, {"irr", a.irr}};
    if (a.irr) {
        count = canbase::irr_count(w);
    } else {
        count = static_cast<long long>(canbase::basic_set_char_p(w, a.e, a.characteristic).size());
        query["e"] = a.e;
    }
    switch (parse_format(a.format)) {
        case Format::Json: {
            json record = make_record("count", std::move(query));
            record["payload"] = {{"count", count}};
            std::cout << record.dump(2) << "\n";
            break;
        }
        case Format::Csv:
            std::cout << "count\n" << count << "\n";
            break;
        case Format::Latex:
            std::cout << "\\begin{table}\n\\caption{Count, type " << a.type << ", n=" << a.n
                      << "}\n\\begin{tabular}{l}\n" << count
                      << " \\\\\n\\end{tabular}\n\\end{table}\n";
            break;
        case Format::Text:
            std::cout << count << "\n";
            break;
    }
    return 0;
}

struct MembershipArgs {
    std::string weights;
    std::string mp;
    std::string format = default_format();
};

int run_membership(const MembershipArgs& a) {
    canbase::WeightSet ws = canbase::WeightSet::parse(a.weights);
    canbase::MultiPartition mp = canbase::MultiPartition::parse(a.mp);
    auto violation = canbase::detail::flotw_violation(mp, ws);
    std::string reason;
    if (violation) {
        std::ostringstream os;
        if (violation->inequality) {
            auto [j, i] = *violation->inequality;
            os << "shifted-row inequality fails at component " << j << ", row " << i;
        } else {
            os << "right-end residues saturate Z/" << ws.e() << "Z at row length "
               << *violation->saturated_length;
        }
        reason = os.str();
    }
    bool member = !violation.has_value();
    if (parse_format(a.format) == Format::Json) {
        json record = make_record("membership", {{"weights", a.weights}, {"mp", a.mp}});
        record["payload"] = {{"member", member}};
        if (!member) record["payload"]["violation"] = reason;
        std::cout << record.dump(2) << "\n";
    } else {
        std::cout << (member ? "true" : "false") << "\n";
        if (!member) std::cout << "violated: " << reason << "\n";
    }
    return 0;
}

struct AFunctionArgs {
    std::string group;
    bool dump_h = false;
    long long max_order = 1000;
};

canbase::WeylType parse_group_label(const std::string& label) {
    if (label.size() < 2)
        throw CLI::ValidationError("--group", "expected a label like A2 or B3");
    canbase::WeylFamily family = canbase::parse_family(label.substr(0, 1));
    int rank = std::stoi(label.substr(1));
    if (rank < 1) throw CLI::ValidationError("--group", "rank must be >= 1");
    // The Coxeter rank label: A<r> is the symmetric group on r+1 letters.
    switch (family) {
        case canbase::WeylFamily::A: return canbase::WeylType(family, rank + 1);
        case canbase::WeylFamily::B:
        case canbase::WeylFamily::D: return canbase::WeylType(family, rank);
    }
    throw CLI::ValidationError("--group", "invalid family");
}

int run_afunction(const AFunctionArgs& a) {
    canbase::WeylType w = parse_group_label(a.group);
    canbase::CoxeterGroup group = canbase::CoxeterGroup::build(w, a.max_order);
    canbase::KLTable table = canbase::KLTable::build(group);
    table.dump_a_values(std::cout);
    if (a.dump_h) table.dump_structure_constants(std::cout);
    return 0;
}

struct CycloArgs {
    int e = 0;
    int order = 0;
    int characteristic = -1;
};

int run_cyclo(const CycloArgs& a) {
    if (a.e > 0) {
        auto report = canbase::check_phi_identity(a.e);
        std::cout << "e = " << a.e << "\n";
        if (report.parity_even) {
            std::cout << "Phi_e(v^2) == Phi_2e(v): " << (report.identity_holds ? "true" : "false")
                      << "\n";
        } else {
            std::cout << "Phi_e(v^2) == Phi_e(v)*Phi_2e(v): "
                      << (report.identity_holds ? "true" : "false") << "\n";
            std::cout << "Phi_2e(v) == +/-Phi_e(-v): "
                      << (report.sign_identity_holds ? "true" : "false");
            if (report.sign_identity_holds)
                std::cout << " (sign " << (report.sign > 0 ? "+" : "-") << ")";
            std::cout << "\n";
        }
        return 0;
    }
    canbase::SpecializationSpec spec(a.order, a.characteristic);
    auto e = canbase::compute_e(spec);
    if (e)
        std::cout << "e = " << *e << "\n";
    else
        std::cout << "e = NONE (semisimple)\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"canonical basic set combinatorics for Hecke algebras of Weyl groups"};
    app.require_subcommand(1);
    app.set_version_flag("--version", CANBASE_VERSION);

    BasicSetArgs bs;
    auto* cmd_bs = app.add_subcommand("basic-set", "enumerate the canonical basic set");
    cmd_bs->add_option("--type", bs.type, "Weyl family: A, B or D")->required();
    cmd_bs->add_option("--n", bs.n, "rank parameter n")->required();
    cmd_bs->add_option("--e", bs.e, "root-of-unity parameter e >= 2")->required();
    cmd_bs->add_option("--char", bs.characteristic, "field characteristic, 0 or a prime");
    cmd_bs->add_option("--format", bs.format, "output format: text, json, csv, latex");

    BasicSetArgs ct;
    auto* cmd_ct = app.add_subcommand("count", "count basic set labels or Irr H_K");
    cmd_ct->add_option("--type", ct.type, "Weyl family: A, B or D")->required();
    cmd_ct->add_option("--n", ct.n, "rank parameter n")->required();
    auto* opt_e = cmd_ct->add_option("--e", ct.e, "root-of-unity parameter e >= 2");
    cmd_ct->add_option("--char", ct.characteristic, "field characteristic, 0 or a prime");
    auto* opt_irr = cmd_ct->add_flag("--irr", ct.irr, "count Irr H_K instead of the basic set");
    cmd_ct->add_option("--format", ct.format, "output format: text, json, csv, latex");
    opt_e->excludes(opt_irr);

    MembershipArgs mb;
    auto* cmd_mb = app.add_subcommand("membership", "FLOTW membership test");
    cmd_mb->add_option("--weights", mb.weights, "weight set literal, e.g. \"{4;1,2}\"")->required();
    cmd_mb->add_option("--mp", mb.mp, "multipartition literal, e.g. \"[3,1]|[2]\"")->required();
    cmd_mb->add_option("--format", mb.format, "output format: text, json");

    AFunctionArgs af;
    auto* cmd_af = app.add_subcommand("afunction", "a-value table for a small Weyl group");
    cmd_af->add_option("--group", af.group, "Coxeter label, e.g. A2, B3")->required();
    cmd_af->add_flag("--dump-h", af.dump_h, "also dump all nonzero structure constants");
    cmd_af->add_option("--max-order", af.max_order, "group order guard (default 1000)");

    CycloArgs cy;
    auto* cmd_cy = app.add_subcommand("cyclo", "cyclotomic identity checks / compute e");
    auto* opt_cy_e = cmd_cy->add_option("--e", cy.e, "check the Phi identities for this e >= 2");
    auto* opt_cy_m = cmd_cy->add_option("--order", cy.order, "multiplicative order of theta(u)");
    auto* opt_cy_p = cmd_cy->add_option("--char", cy.characteristic, "field characteristic");
    opt_cy_e->excludes(opt_cy_m)->excludes(opt_cy_p);
    opt_cy_m->needs(opt_cy_p);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_bs->parsed()) return run_basic_set(bs);
        if (cmd_ct->parsed()) {
            if (!ct.irr && opt_e->count() == 0) {
                std::cerr << "error: count requires either --e or --irr\n";
                return 2;
            }
            return run_count(ct);
        }
        if (cmd_mb->parsed()) return run_membership(mb);
        if (cmd_af->parsed()) return run_afunction(af);
        if (cmd_cy->parsed()) {
            if (opt_cy_e->count() == 0 && opt_cy_m->count() == 0) {
                std::cerr << "error: cyclo requires either --e or --order/--char\n";
                return 2;
            }
            return run_cyclo(cy);
        }
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const canbase::BadCharacteristic& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const canbase::GroupTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
