// Command-line front end: ideal and module operations on text files, and the
// verification catalog.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "cmc/catalog.hpp"
#include "cmc/deform.hpp"
#include "cmc/parser.hpp"
#include "cmc/properties.hpp"

namespace {

using cmc::Document;
using cmc::Ideal;
using cmc::Polynomial;
using json = nlohmann::ordered_json;

constexpr int kPass = 0, kFail = 1, kUsage = 2;

struct Globals {
    std::string field = "q";
    std::uint64_t seed = 0;
    bool json = false;
    unsigned threads = 0;
};

json strings(const std::vector<Polynomial>& ps) {
    json out = json::array();
    for (const auto& p : ps) out.push_back(p.to_string());
    return out;
}

// Plain rendering: one `key: value` per line, arrays as indented items.
void print_text(const json& j, std::ostream& os, const std::string& indent = "") {
    for (const auto& [key, value] : j.items()) {
        if (value.is_array()) {
            os << indent << key << ":\n";
            for (const auto& item : value) {
                if (item.is_object()) {
                    os << indent << "  -\n";
                    print_text(item, os, indent + "    ");
                } else {
                    os << indent << "  - " << (item.is_string() ? item.get<std::string>() : item.dump()) << "\n";
                }
            }
        } else if (value.is_object()) {
            os << indent << key << ":\n";
            print_text(value, os, indent + "  ");
        } else {
            os << indent << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
        }
    }
}

void emit(const Globals& g, const json& j) {
    if (g.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        print_text(j, std::cout);
    }
}

Document load(const Globals& g, const std::string& path) {
    if (!std::ifstream(path)) throw std::invalid_argument("cannot open " + path);
    std::optional<cmc::Field> override;
    if (g.field != "q") override = cmc::parse_field(g.field);
    return cmc::parse_file(path, override);
}

json hilbert_json(const cmc::HilbertData& h) {
    json table = json::array();
    for (const auto& [d, v] : h.table) table.push_back({d, v});
    return {{"polynomial", h.polynomial_string()},
            {"dimension", h.dimension},
            {"numerator", h.numerator},
            {"regularity_index", h.regularity_index},
            {"table", table}};
}

json report_json(const cmc::VerificationReport& r) {
    json details = json::array();
    for (const auto& [label, value] : r.details) details.push_back({{"label", label}, {"value", value}});
    return {{"check", r.id}, {"status", cmc::to_string(r.status)}, {"elapsed_s", r.elapsed.count()}, {"details", details}};
}

void print_report(const Globals& g, const cmc::VerificationReport& r) {
    if (g.json) {
        std::cout << report_json(r).dump() << std::endl;
        return;
    }
    std::ostringstream os;
    os << "check " << r.id << ": " << cmc::to_string(r.status) << " (" << std::fixed << std::setprecision(2)
       << r.elapsed.count() << "s)\n";
    for (const auto& [label, value] : r.details) os << "  " << label << ": " << value << "\n";
    std::cout << os.str() << std::flush;
}

int run_verify(const Globals& g, const std::string& target, int cases) {
    if (target == "list") {
        for (const auto& e : cmc::catalog()) std::cout << e.id << "  " << e.summary << "\n";
        return kPass;
    }
    cmc::CatalogOptions opts;
    opts.field = cmc::parse_field(g.field);
    opts.seed = g.seed;
    opts.property_cases = cases;
    std::vector<std::string> ids;
    if (target == "all") {
        opts.all_characteristics = true;
        for (const auto& e : cmc::catalog()) ids.push_back(e.id);
    } else if (cmc::find_check(target)) {
        ids.push_back(target);
    } else {
        std::cerr << "unknown check '" << target << "'; available:\n";
        for (const auto& e : cmc::catalog()) std::cerr << "  " << e.id << "\n";
        return kUsage;
    }
    auto reports = cmc::run_checks(ids, opts, [&](const cmc::VerificationReport& r) { print_report(g, r); }, g.threads);
    bool ok = std::all_of(reports.begin(), reports.end(),
                          [](const cmc::VerificationReport& r) { return r.status == cmc::CheckStatus::pass; });
    if (!g.json) std::cout << (ok ? "all checks passed" : "some checks failed") << "\n";
    return ok ? kPass : kFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Gröbner, Fitting-ideal and deformation computations on text-format inputs"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--field", g.field, "coefficient field: q or fp:<p> (default q)");
    app.add_option("--seed", g.seed, "seed for randomized instances (default 0)");
    app.add_flag("--json", g.json, "JSON output");
    app.add_option("--threads", g.threads, "threads for verify (default: hardware concurrency)");

    std::string file, ideal_name = "I", poly_text, by_name, matrix_name;
    int depth = 8, bound = -1, fitting_n = 0, cases = 200;
    bool basis = false;
    std::string target;

    auto* gb = app.add_subcommand("gb", "reduced Gröbner basis of an ideal");
    gb->add_option("file", file)->required();
    gb->add_option("--ideal", ideal_name, "ideal name (default I)");

    auto* member = app.add_subcommand("member", "ideal membership of a polynomial");
    member->add_option("file", file)->required();
    member->add_option("poly", poly_text)->required();
    member->add_option("--ideal", ideal_name, "ideal name (default I)");
    member->add_option("--degree-bound", bound, "linear-algebra cross-check bound (default max degree + 4)");

    auto* hil = app.add_subcommand("hilbert", "Hilbert function and polynomial of S/I");
    hil->add_option("file", file)->required();
    hil->add_option("--ideal", ideal_name, "ideal name (default I)");
    hil->add_option("--depth", depth, "minimum table depth (default 8)");

    auto* fit = app.add_subcommand("fitting", "Fitting ideal of a presentation matrix");
    fit->add_option("file", file)->required();
    fit->add_option("--matrix", matrix_name, "matrix name (default: the first matrix)");
    fit->add_option("--n", fitting_n, "index n of Fitt^n (default 0)");

    auto* tan = app.add_subcommand("tangent", "degree-0 part of Hom(I, S/I)");
    tan->add_option("file", file)->required();
    tan->add_option("--ideal", ideal_name, "ideal name (default I)");
    tan->add_flag("--basis", basis, "print a basis");

    auto* lift = app.add_subcommand("liftcheck", "perturbed product modulo an obstruction ideal");
    lift->add_option("file", file)->required();

    auto* sat = app.add_subcommand("saturate", "saturation (I : J^inf)");
    sat->add_option("file", file)->required();
    sat->add_option("--ideal", ideal_name, "ideal name (default I)");
    sat->add_option("--by", by_name, "ideal name to saturate by (default: the irrelevant ideal)");
    sat->add_option("--poly", poly_text, "saturate by a single polynomial");

    auto* quo = app.add_subcommand("quotient", "colon ideal (I : J)");
    quo->add_option("file", file)->required();
    quo->add_option("--ideal", ideal_name, "ideal name (default I)");
    quo->add_option("--by", by_name, "ideal name");
    quo->add_option("--poly", poly_text, "a single polynomial");

    auto* ver = app.add_subcommand("verify", "run catalog checks: an id, all, or list");
    ver->add_option("check", target)->required();
    ver->add_option("--cases", cases, "cases per randomized property (default 200)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (ver->parsed()) return run_verify(g, target, cases);

        Document doc = load(g, file);
        const auto& R = doc.ring;
        json out;
        out["ring"] = R->describe();

        if (gb->parsed()) {
            Ideal I(R, doc.ideal(ideal_name));
            auto basis_polys = I.groebner();
            out["ideal"] = I.to_string();
            out["size"] = basis_polys.size();
            out["groebner"] = strings(basis_polys);
        } else if (member->parsed()) {
            Ideal I(R, doc.ideal(ideal_name));
            Polynomial f = cmc::parse_polynomial(R, poly_text);
            bool in = I.contains(f);
            out["polynomial"] = f.to_string();
            out["member"] = in;
            out["normal_form"] = I.normal_form(f).to_string();
            int top = 0;
            for (const auto& p : I.generators()) top = std::max(top, p.degree());
            const int limit = bound >= 0 ? bound : top + 4;
            if (I.is_homogeneous() && f.is_homogeneous() && f.degree() <= limit) {
                bool oracle = cmc::linear_algebra_member(f, I.generators());
                out["linear_algebra_check"] = oracle == in ? "agrees" : "DISAGREES";
                if (oracle != in) {
                    emit(g, out);
                    return kFail;
                }
            } else {
                out["linear_algebra_check"] = "skipped (inhomogeneous or above degree bound " + std::to_string(limit) + ")";
            }
        } else if (hil->parsed()) {
            Ideal I(R, doc.ideal(ideal_name));
            out["ideal"] = I.to_string();
            out["hilbert"] = hilbert_json(cmc::hilbert(I, depth));
        } else if (fit->parsed()) {
            if (doc.matrices.empty()) throw std::invalid_argument("the file declares no matrix");
            const auto& M = matrix_name.empty() ? doc.matrices.begin()->second : doc.matrix(matrix_name);
            Ideal F = cmc::fitting_ideal(cmc::ModulePresentation(M), static_cast<std::size_t>(fitting_n));
            out["fitting_index"] = fitting_n;
            out["generators"] = strings(F.generators());
            out["groebner"] = strings(F.groebner());
            if (F.is_homogeneous() && !F.is_zero()) out["hilbert_polynomial"] = cmc::hilbert(F).polynomial_string();
        } else if (tan->parsed()) {
            Ideal I(R, doc.ideal(ideal_name));
            auto rep = cmc::tangent_space(I);
            out["ideal"] = I.to_string();
            out["dimension"] = rep.dimension;
            if (basis) {
                json b = json::array();
                for (const auto& v : rep.basis) b.push_back(v.to_string());
                out["basis"] = b;
            }
        } else if (lift->parsed()) {
            auto it = doc.lists.find("deform");
            if (it == doc.lists.end()) throw std::invalid_argument("the file needs `set deform = ...;`");
            cmc::DeformationSetup s(doc.matrix("left"), doc.matrix("right"), Ideal(R, doc.ideal("J")), it->second,
                                    static_cast<int>(doc.integer("truncate").value_or(3)));
            auto rep = cmc::lift_check(s);
            out["product"] = rep.product.to_string();
            out["residue"] = rep.residue.to_string();
            out["obstruction"] = s.obstruction.to_string();
            out["verdict"] = rep.zero_mod_obstruction ? "product lies in the obstruction ideal" : "product not in the obstruction ideal";
            emit(g, out);
            return rep.zero_mod_obstruction ? kPass : kFail;
        } else if (sat->parsed() || quo->parsed()) {
            Ideal I(R, doc.ideal(ideal_name));
            Ideal result(R);
            if (!poly_text.empty()) {
                auto h = cmc::parse_polynomial(R, poly_text);
                result = sat->parsed() ? cmc::saturate(I, h) : cmc::quotient(I, h);
                out["by"] = h.to_string();
            } else if (!by_name.empty()) {
                Ideal J(R, doc.ideal(by_name));
                result = sat->parsed() ? cmc::saturate(I, J) : cmc::quotient(I, J);
                out["by"] = J.to_string();
            } else if (sat->parsed()) {
                result = cmc::saturate(I, Ideal::irrelevant(R));
                out["by"] = "irrelevant ideal";
            } else {
                throw std::invalid_argument("quotient needs --by or --poly");
            }
            out["ideal"] = I.to_string();
            out["result"] = strings(result.groebner());
            out["equals_input"] = cmc::ideal_equal(I, result);
        }
        emit(g, out);
        return kPass;
    } catch (const cmc::ParseError& e) {
        std::cerr << "parse error at line " << e.line() << ", column " << e.column() << ": " << e.what() << "\n";
        return kUsage;
    } catch (const cmc::FieldError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
}
