#pragma once

// Helpers shared by the JSON readers: typed access with a path in the
// error message, and BigInt <-> JSON (numbers when they fit in 64 bits,
// decimal strings otherwise).

#include "telescoped/error.hpp"
#include "telescoped/exactalg/integer.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace telescoped::jsonio {

using json = nlohmann::ordered_json;

[[noreturn]] inline void fail(const std::string& path, const std::string& why)
{
    throw ParseError(why + " at " + (path.empty() ? std::string("/") : path));
}

inline const json& member(const json& j, const std::string& key, const std::string& path)
{
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path, "missing key \"" + key + "\"");
    return *it;
}

inline const json* optional_member(const json& j, const std::string& key, const std::string& path)
{
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

inline const json& array(const json& j, const std::string& path)
{
    if (!j.is_array()) fail(path, "expected an array");
    return j;
}

inline BigInt to_bigint(const json& j, const std::string& path)
{
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
        return BigInt(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
            fail(path, "expected an integer string");
        return BigInt(s);
    }
    fail(path, "expected an integer");
}

inline long long to_int(const json& j, const std::string& path)
{
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<long long>();
}

inline json from_bigint(const BigInt& v)
{
    static const BigInt lo(std::numeric_limits<std::int64_t>::min());
    static const BigInt hi(std::numeric_limits<std::int64_t>::max());
    if (v >= lo && v <= hi) return json(v.convert_to<std::int64_t>());
    return json(v.str());
}

inline IntMatrix to_matrix(const json& j, const std::string& path, Eigen::Index cols_if_empty = 0)
{
    array(j, path);
    const auto rows = static_cast<Eigen::Index>(j.size());
    Eigen::Index cols = cols_if_empty;
    if (rows > 0) {
        array(j[0], path + "/0");
        cols = static_cast<Eigen::Index>(j[0].size());
    }
    IntMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const std::string rp = path + "/" + std::to_string(i);
        const json& row = array(j[static_cast<std::size_t>(i)], rp);
        if (static_cast<Eigen::Index>(row.size()) != cols) fail(rp, "ragged matrix row");
        for (Eigen::Index c = 0; c < cols; ++c)
            m(i, c) = to_bigint(row[static_cast<std::size_t>(c)], rp + "/" + std::to_string(c));
    }
    return m;
}

inline json from_matrix(const IntMatrix& m)
{
    json out = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(from_bigint(m(i, c)));
        out.push_back(std::move(row));
    }
    return out;
}

inline json from_vector(const IntVector& v)
{
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(from_bigint(v(i)));
    return out;
}

inline IntVector to_vector(const json& j, const std::string& path)
{
    array(j, path);
    IntVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i)
        v(static_cast<Eigen::Index>(i)) = to_bigint(j[i], path + "/" + std::to_string(i));
    return v;
}

/// Parse text, mapping syntax errors to ParseError with the byte offset.
inline json parse_text(const std::string& text, const std::string& source_name)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(source_name + ": malformed JSON", e.byte);
    }
}

/// Read and parse a JSON file; unreadable files are parse errors too.
inline json load_file(const std::string& file)
{
    std::ifstream in(file, std::ios::binary);
    if (!in) throw ParseError(file + ": cannot read file");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_text(text.str(), file);
}

}  // namespace telescoped::jsonio
