#include "telescoped/exactalg/integer.hpp"

namespace telescoped {

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long long>> rows)
{
    const auto r = static_cast<Eigen::Index>(rows.size());
    const auto c = r ? static_cast<Eigen::Index>(rows.begin()->size()) : 0;
    IntMatrix m(r, c);
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        Eigen::Index j = 0;
        for (long long v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

IntVector int_vector(std::initializer_list<long long> entries)
{
    IntVector v(static_cast<Eigen::Index>(entries.size()));
    Eigen::Index i = 0;
    for (long long x : entries) v(i++) = x;
    return v;
}

IntVector int_vector(const std::vector<BigInt>& entries)
{
    IntVector v(static_cast<Eigen::Index>(entries.size()));
    for (std::size_t i = 0; i < entries.size(); ++i) v(static_cast<Eigen::Index>(i)) = entries[i];
    return v;
}

std::string to_string(const BigInt& a)
{
    return a.str();
}

std::string to_string(const IntVector& v)
{
    std::string s = "(";
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v(i).str();
    }
    return s + ")";
}

std::string to_string(const IntMatrix& m)
{
    std::string s = "[";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        if (i) s += ", ";
        s += "[";
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) s += ", ";
            s += m(i, j).str();
        }
        s += "]";
    }
    return s + "]";
}

bool lex_less(const IntVector& a, const IntVector& b)
{
    const Eigen::Index n = std::min(a.size(), b.size());
    for (Eigen::Index i = 0; i < n; ++i)
        if (a(i) != b(i)) return a(i) < b(i);
    return a.size() < b.size();
}

}  // namespace telescoped
