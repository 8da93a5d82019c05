// Command-line front end: explore elements, validate tuples, enumerate
// components, act on them, and draw rank-2 alcove pictures.
//
// Exit codes: 0 success / tuple valid, 1 tuple invalid, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "shivar/affine_weyl.hpp"
#include "shivar/json_io.hpp"
#include "shivar/phi_rep.hpp"
#include "shivar/root_system.hpp"
#include "shivar/shi_characterization.hpp"
#include "shivar/shi_variety.hpp"
#include "shivar/svg_plot.hpp"

namespace {

using namespace shivar;
using nlohmann::json;

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

RootSystem root_system_for(const std::string& type) {
    const TypeName t = parse_type_name(type);
    return RootSystem(t.family, t.rank);
}

// Digits for rank <= 9 ("0121"), or whitespace/comma separated integers.
std::vector<int> parse_word(const std::string& text, int rank) {
    std::vector<int> word;
    const bool separated = text.find_first_of(", \t") != std::string::npos;
    if (separated) {
        std::string token;
        std::istringstream in(text);
        while (std::getline(in, token, ' ')) {
            std::istringstream piece(token);
            std::string sub;
            while (std::getline(piece, sub, ',')) {
                if (sub.empty()) continue;
                try {
                    word.push_back(std::stoi(sub));
                } catch (const std::exception&) {
                    throw UsageError("bad word token '" + sub + "'");
                }
            }
        }
    } else {
        for (char c : text) {
            if (c < '0' || c > '9') throw UsageError(std::string("bad word character '") + c + "'");
            word.push_back(c - '0');
        }
    }
    for (int i : word)
        if (i < 0 || i > rank)
            throw UsageError("generator index " + std::to_string(i) + " out of range 0.." +
                             std::to_string(rank));
    return word;
}

std::string word_to_string(const std::vector<int>& word) {
    if (word.empty()) return "e";
    std::string s;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(word[i]);
    }
    return s;
}

void write_output(const std::string& content, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot open output path: " + path);
    out << content;
    if (!out.flush()) throw UsageError("cannot write output path: " + path);
}

int cmd_info(const std::string& type, const std::string& format) {
    const RootSystem rs = root_system_for(type);
    if (format == "json") {
        std::cout << root_system_to_json(rs).dump(2) << '\n';
        return kExitValid;
    }
    std::cout << "type: " << rs.name() << '\n'
              << "positive roots: " << rs.num_positive_roots() << '\n'
              << "index of connection: " << rs.index_of_connection() << '\n'
              << "finite Weyl order: " << rs.finite_weyl_order() << '\n'
              << "components: " << component_count_formula(rs) << '\n'
              << "highest root: " << format_tuple(rs.positive_root(rs.highest_root_index()))
              << '\n'
              << "highest short root: "
              << format_tuple(rs.positive_root(rs.highest_short_root_index())) << '\n';
    std::cout << "cartan:\n";
    for (int i = 0; i < rs.rank(); ++i)
        std::cout << "  " << format_tuple(rs.cartan().row(i).transpose()) << '\n';
    std::cout << "roots (height, coroot coords):\n";
    for (int k = 0; k < rs.num_positive_roots(); ++k)
        std::cout << "  " << k << ": " << format_tuple(rs.positive_root(k)) << "  h="
                  << rs.height(k) << "  d=" << format_tuple(rs.coroot_coordinates(k)) << '\n';
    return kExitValid;
}

std::optional<int> component_id_if_cheap(const RootSystem& rs, const IntVector& lambda) {
    if (rs.family() == Family::E && rs.rank() >= 7) return std::nullopt;
    EnumerateOptions options;
    options.with_representatives = false;
    return enumerate_admitted(rs, options).component_index(lambda);
}

int cmd_element(const std::string& type, const std::string& word_text,
                const std::string& format) {
    const RootSystem rs = root_system_for(type);
    const std::vector<int> word = parse_word(word_text, rs.rank());
    const AffineElement w = from_word(rs, word);
    const IntVector tuple = shi_vector(rs, w);
    const IntVector lambda = lambda_vector(rs, w);
    const std::optional<int> id = component_id_if_cheap(rs, lambda);

    if (format == "json") {
        json doc;
        doc["type"] = rs.name();
        doc["word"] = word;
        doc["shi_vector"] = tuple_to_json(tuple);
        doc["length"] = length(rs, w);
        doc["sign_vector"] = tuple_to_json(sign_vector(tuple));
        doc["lambda"] = tuple_to_json(lambda);
        doc["component"] = tuple_to_json(lambda);
        if (id) doc["component_id"] = *id;
        std::cout << doc.dump(2) << '\n';
        return kExitValid;
    }
    std::cout << "type: " << rs.name() << '\n'
              << "word: " << word_to_string(word) << '\n'
              << "shi vector: " << format_tuple(tuple) << '\n'
              << "length: " << shi_length(tuple) << '\n'
              << "sign vector: " << format_signs(sign_vector(tuple)) << '\n'
              << "lambda: " << format_tuple(lambda) << '\n';
    std::cout << "component: " << format_tuple(lambda);
    if (id) std::cout << " (id " << *id << ")";
    std::cout << '\n';
    return kExitValid;
}

int cmd_validate(const std::string& type, const std::vector<std::string>& tuple_texts,
                 const std::string& file, const std::string& criterion,
                 const std::string& format) {
    const RootSystem rs = root_system_for(type);
    const ShiValidator validator(rs);

    std::vector<IntVector> tuples;
    try {
        for (const std::string& text : tuple_texts) tuples.push_back(parse_tuple(text));
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) throw UsageError("cannot open tuple file: " + file);
            json doc = json::parse(in, nullptr, true);
            if (!doc.is_array()) throw UsageError("tuple file must hold a JSON array");
            if (!doc.empty() && doc.front().is_number_integer()) {
                tuples.push_back(tuple_from_json(doc));
            } else {
                for (const json& row : doc) tuples.push_back(tuple_from_json(row));
            }
        }
    } catch (const InvalidTupleError& e) {
        throw UsageError(e.what());
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed JSON: ") + e.what());
    }
    if (tuples.empty()) throw UsageError("no tuples given; use --tuple or --file");
    for (const IntVector& t : tuples)
        if (t.size() != rs.num_positive_roots())
            throw UsageError("tuple " + format_tuple(t) + " has length " +
                             std::to_string(t.size()) + ", expected " +
                             std::to_string(rs.num_positive_roots()) + " for " + rs.name());

    json report = json::array();
    bool all_valid = true;
    for (const IntVector& t : tuples) {
        std::optional<Violation> violation;
        if (criterion == "coroot" || criterion == "both")
            violation = validator.first_violation(Criterion::coroot, t);
        if (!violation && (criterion == "norm" || criterion == "both"))
            violation = validator.first_violation(Criterion::norm, t);
        const bool valid = !violation;
        all_valid = all_valid && valid;

        if (format == "json") {
            json entry;
            entry["tuple"] = tuple_to_json(t);
            entry["valid"] = valid;
            if (violation) {
                json v;
                v["criterion"] = violation->criterion == Criterion::coroot ? "coroot" : "norm";
                v["bound"] = violation->upper ? "upper" : "lower";
                v["alpha"] = tuple_to_json(rs.positive_root(violation->triple.a));
                v["beta"] = tuple_to_json(rs.positive_root(violation->triple.b));
                v["gamma"] = tuple_to_json(rs.positive_root(violation->triple.g));
                entry["violation"] = v;
            }
            report.push_back(std::move(entry));
        } else {
            std::cout << format_tuple(t) << ": " << (valid ? "valid" : "invalid");
            if (violation) std::cout << " (" << describe(rs, *violation) << ")";
            std::cout << '\n';
        }
    }
    if (format == "json") std::cout << report.dump(2) << '\n';
    return all_valid ? kExitValid : kExitInvalid;
}

int cmd_components(const std::string& type, const std::string& format, const std::string& output,
                   bool formula_only, bool allow_huge, bool no_representatives) {
    const RootSystem rs = root_system_for(type);
    if (formula_only) {
        if (format == "json") {
            json doc;
            doc["type"] = rs.name();
            doc["formula_count"] = component_count_formula(rs);
            write_output(doc.dump(2) + "\n", output);
        } else {
            write_output(rs.name() + ": " + std::to_string(component_count_formula(rs)) +
                             " components\n",
                         output);
        }
        return kExitValid;
    }

    EnumerateOptions options;
    options.allow_huge = allow_huge;
    options.with_representatives = !no_representatives;
    const ComponentTable table = enumerate_admitted(rs, options);

    if (format == "json") {
        write_output(component_table_to_json(table).dump(2) + "\n", output);
    } else if (format == "csv") {
        write_output(component_table_to_csv(table), output);
    } else {
        std::ostringstream os;
        os << rs.name() << ": " << table.count << " components (formula " << table.formula_count
           << ")\n";
        for (std::size_t c = 0; c < table.admitted.size(); ++c) {
            os << "  " << c << ": " << format_tuple(table.admitted[c]);
            if (table.has_representatives()) {
                os << "  reps:";
                for (const FiniteElementEntry& fe : table.representatives[c])
                    os << ' ' << word_to_string(fe.word);
            }
            os << '\n';
        }
        write_output(os.str(), output);
    }
    return kExitValid;
}

int cmd_act(const std::string& type, const std::string& word_text, const std::string& lambda_text,
            const std::string& format) {
    const RootSystem rs = root_system_for(type);
    const std::vector<int> word = parse_word(word_text, rs.rank());
    IntVector lambda;
    try {
        lambda = parse_tuple(lambda_text);
    } catch (const InvalidTupleError& e) {
        throw UsageError(e.what());
    }

    IntVector image;
    try {
        image = act_on_component(rs, from_word(rs, word), lambda);
    } catch (const NotAdmittedError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    if (format == "json") {
        json doc;
        doc["type"] = rs.name();
        doc["word"] = word;
        doc["component"] = tuple_to_json(lambda);
        doc["image"] = tuple_to_json(image);
        const std::optional<int> id = component_id_if_cheap(rs, image);
        if (id) doc["image_id"] = *id;
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << word_to_string(word) << " . " << format_tuple(lambda) << " = "
                  << format_tuple(image) << '\n';
    }
    return kExitValid;
}

int cmd_plot(const std::string& type, const std::string& output, double radius) {
    const RootSystem rs = root_system_for(type);
    if (rs.rank() != 2) throw UsageError("plot is limited to rank-2 types, got " + rs.name());
    EnumerateOptions table_options;
    table_options.with_representatives = false;
    const ComponentTable table = enumerate_admitted(rs, table_options);
    PlotOptions options;
    options.radius = radius;
    write_output(alcove_svg(rs, table, options), output);
    return kExitValid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact alcove combinatorics for affine Weyl groups"};
    app.require_subcommand(1);

    std::string type;
    std::string format = "text";
    std::string word_text;
    std::string output;
    std::string criterion = "both";
    std::string tuple_file;
    std::string lambda_text;
    std::vector<std::string> tuple_texts;
    bool formula_only = false;
    bool allow_huge = false;
    bool no_representatives = false;
    double radius = 4.0;

    CLI::App* info = app.add_subcommand("info", "Describe a root system");
    info->add_option("--type", type, "Type, e.g. A2, B3, E8")->required();
    info->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* element = app.add_subcommand("element", "Report on the element of a word");
    element->add_option("--type", type)->required();
    element->add_option("--word", word_text, "Generator word, digits or separated integers")
        ->required();
    element->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* validate = app.add_subcommand("validate", "Check alcove tuples");
    validate->add_option("--type", type)->required();
    validate
        ->add_option_function<std::string>(
            "--tuple", [&tuple_texts](const std::string& s) { tuple_texts.push_back(s); },
            "Tuple as a JSON array, repeatable")
        ->trigger_on_parse();
    validate->add_option("--file", tuple_file, "JSON file with one tuple or an array of tuples");
    validate->add_option("--criterion", criterion)
        ->check(CLI::IsMember({"coroot", "norm", "both"}));
    validate->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* components = app.add_subcommand("components", "Enumerate admitted vectors");
    components->add_option("--type", type)->required();
    components->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
    components->add_option("--output", output, "Output path (default stdout)");
    components->add_flag("--formula-only", formula_only, "Print the count formula, no enumeration");
    components->add_flag("--allow-huge", allow_huge, "Lift the E7/E8 and |W| resource guards");
    components->add_flag("--no-representatives", no_representatives,
                         "Skip the finite Weyl representatives");

    CLI::App* act = app.add_subcommand("act", "Apply a word to a component");
    act->add_option("--type", type)->required();
    act->add_option("--word", word_text)->required();
    act->add_option("--component", lambda_text, "Admitted vector as a JSON array")->required();
    act->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* plot = app.add_subcommand("plot", "Draw rank-2 alcoves colored by component");
    plot->add_option("--type", type)->required();
    plot->add_option("--output", output, "SVG output path")->required();
    plot->add_option("--radius", radius, "Drawing radius in short-root lengths");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (info->parsed()) return cmd_info(type, format);
        if (element->parsed()) return cmd_element(type, word_text, format);
        if (validate->parsed())
            return cmd_validate(type, tuple_texts, tuple_file, criterion, format);
        if (components->parsed())
            return cmd_components(type, format, output, formula_only, allow_huge,
                                  no_representatives);
        if (act->parsed()) return cmd_act(type, word_text, lambda_text, format);
        if (plot->parsed()) return cmd_plot(type, output, radius);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvalidTypeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvalidTupleError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ResourceGuardError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitUsage;
}
