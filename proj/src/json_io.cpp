#include "shivar/json_io.hpp"

#include <sstream>

namespace shivar {

using nlohmann::json;

namespace {

json int_vector_to_json(const IntVector& v) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
    return arr;
}

json int_matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        rows.push_back(int_vector_to_json(m.row(i).transpose()));
    return rows;
}

}  // namespace

IntVector tuple_from_json(const json& arr) {
    if (!arr.is_array()) throw InvalidTupleError("expected a JSON array of integers");
    IntVector v(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_number_integer())
            throw InvalidTupleError("expected a JSON array of integers");
        v[static_cast<Eigen::Index>(i)] = arr[i].get<Int>();
    }
    return v;
}

IntVector parse_tuple(const std::string& text) {
    json parsed;
    try {
        parsed = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidTupleError(std::string("malformed tuple: ") + e.what());
    }
    return tuple_from_json(parsed);
}

json tuple_to_json(const IntVector& v) { return int_vector_to_json(v); }

json root_system_to_json(const RootSystem& rs) {
    json doc;
    doc["family"] = std::string(1, family_char(rs.family()));
    doc["rank"] = rs.rank();
    doc["cartan"] = int_matrix_to_json(rs.cartan());
    json roots = json::array();
    json coroots = json::array();
    for (int k = 0; k < rs.num_positive_roots(); ++k) {
        roots.push_back(int_vector_to_json(rs.positive_root(k)));
        coroots.push_back(int_vector_to_json(rs.coroot_coordinates(k)));
    }
    doc["positive_roots"] = roots;
    doc["coroot_coords"] = coroots;
    doc["index_of_connection"] = rs.index_of_connection();
    return doc;
}

RootSystem root_system_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("family") || !doc.contains("rank"))
        throw InvalidTypeError("root system document needs family and rank");
    const std::string fam = doc["family"].get<std::string>();
    if (fam.size() != 1) throw InvalidTypeError("bad family: " + fam);
    RootSystem rs(family_from_char(fam[0]), doc["rank"].get<int>());
    if (doc.contains("cartan") && int_matrix_to_json(rs.cartan()) != doc["cartan"])
        throw InvalidTupleError("cartan table does not match " + rs.name());
    auto check_rows = [&](const char* key, auto&& row_of) {
        if (!doc.contains(key)) return;
        const json& rows = doc[key];
        if (static_cast<int>(rows.size()) != rs.num_positive_roots())
            throw InvalidTupleError(std::string(key) + " length does not match " + rs.name());
        for (int k = 0; k < rs.num_positive_roots(); ++k)
            if (tuple_from_json(rows[static_cast<std::size_t>(k)]) != row_of(k))
                throw InvalidTupleError(std::string(key) + " row " + std::to_string(k) +
                                        " does not match " + rs.name());
    };
    check_rows("positive_roots", [&](int k) { return rs.positive_root(k); });
    check_rows("coroot_coords", [&](int k) { return rs.coroot_coordinates(k); });
    if (doc.contains("index_of_connection") &&
        doc["index_of_connection"].get<Int>() != rs.index_of_connection())
        throw InvalidTupleError("index_of_connection does not match " + rs.name());
    return rs;
}

json shi_vector_to_json(const RootSystem& rs, const IntVector& entries) {
    if (entries.size() != rs.num_positive_roots())
        throw InvalidTupleError("shi_vector_to_json: wrong tuple length for " + rs.name());
    json doc;
    doc["family"] = std::string(1, family_char(rs.family()));
    doc["rank"] = rs.rank();
    json roots = json::array();
    for (int k = 0; k < rs.num_positive_roots(); ++k)
        roots.push_back(int_vector_to_json(rs.positive_root(k)));
    doc["positive_roots"] = roots;
    doc["entries"] = int_vector_to_json(entries);
    return doc;
}

IntVector shi_vector_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("family") || !doc.contains("rank") ||
        !doc.contains("entries"))
        throw InvalidTupleError("shi vector document needs family, rank, entries");
    const std::string fam = doc["family"].get<std::string>();
    if (fam.size() != 1) throw InvalidTypeError("bad family: " + fam);
    const RootSystem rs(family_from_char(fam[0]), doc["rank"].get<int>());
    const IntVector entries = tuple_from_json(doc["entries"]);
    if (entries.size() != rs.num_positive_roots())
        throw InvalidTupleError("entries length does not match |Phi+| of " + rs.name());
    if (doc.contains("positive_roots")) {
        const json& roots = doc["positive_roots"];
        if (static_cast<int>(roots.size()) != rs.num_positive_roots())
            throw InvalidTupleError("positive_roots header does not match " + rs.name());
        for (int k = 0; k < rs.num_positive_roots(); ++k)
            if (tuple_from_json(roots[static_cast<std::size_t>(k)]) != rs.positive_root(k))
                throw InvalidTupleError("positive_roots header is not in canonical order");
    }
    return entries;
}

json component_table_to_json(const ComponentTable& table) {
    json doc;
    doc["family"] = std::string(1, static_cast<char>(table.family));
    doc["rank"] = table.rank;
    doc["count"] = table.count;
    doc["formula_count"] = table.formula_count;
    json comps = json::array();
    for (std::size_t c = 0; c < table.admitted.size(); ++c) {
        json entry;
        entry["id"] = c;
        entry["lambda"] = int_vector_to_json(table.admitted[c]);
        if (table.has_representatives()) {
            json reps = json::array();
            for (const FiniteElementEntry& fe : table.representatives[c]) reps.push_back(fe.word);
            entry["representatives"] = reps;
            entry["orbit_count"] = table.representatives[c].size();
        }
        comps.push_back(std::move(entry));
    }
    doc["components"] = std::move(comps);
    return doc;
}

ComponentTable component_table_from_json(const json& doc) {
    ComponentTable table;
    const std::string fam = doc.at("family").get<std::string>();
    if (fam.size() != 1) throw InvalidTypeError("bad family: " + fam);
    table.family = family_from_char(fam[0]);
    table.rank = doc.at("rank").get<int>();
    table.count = doc.at("count").get<Int>();
    table.formula_count = doc.at("formula_count").get<Int>();
    const RootSystem rs(table.family, table.rank);
    bool any_reps = false;
    for (const json& entry : doc.at("components")) {
        IntVector lambda = tuple_from_json(entry.at("lambda"));
        if (lambda.size() != rs.num_positive_roots())
            throw InvalidTupleError("component vector length does not match " + rs.name());
        table.admitted.push_back(std::move(lambda));
        if (entry.contains("representatives")) any_reps = true;
    }
    if (any_reps) {
        table.representatives.resize(table.admitted.size());
        std::size_t c = 0;
        for (const json& entry : doc.at("components")) {
            for (const json& word_json : entry.at("representatives")) {
                FiniteElementEntry fe;
                fe.word = word_json.get<std::vector<int>>();
                fe.element = from_word(rs, fe.word);
                table.representatives[c].push_back(std::move(fe));
            }
            ++c;
        }
    }
    return table;
}

std::string component_table_to_csv(const ComponentTable& table) {
    std::ostringstream os;
    os << "id,lambda,orbit_count,representatives\n";
    for (std::size_t c = 0; c < table.admitted.size(); ++c) {
        os << c << ",\"";
        const IntVector& v = table.admitted[c];
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            if (i) os << ' ';
            os << v[i];
        }
        os << "\",";
        if (table.has_representatives()) {
            os << table.representatives[c].size() << ",\"";
            for (std::size_t r = 0; r < table.representatives[c].size(); ++r) {
                if (r) os << '|';
                const std::vector<int>& word = table.representatives[c][r].word;
                if (word.empty()) os << 'e';
                for (std::size_t t = 0; t < word.size(); ++t) {
                    if (t) os << ' ';
                    os << word[t];
                }
            }
            os << '"';
        } else {
            os << ",";
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace shivar
