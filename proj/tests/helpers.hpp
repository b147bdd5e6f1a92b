#pragma once

#include <string>
#include <vector>

#include "tropfano/hpoly.hpp"
#include "tropfano/matrix.hpp"
#include "tropfano/tratfn.hpp"

namespace tropfano::testutil {

inline std::vector<Rational> qv(std::vector<long> v) {
    std::vector<Rational> out;
    for (long x : v) out.push_back(Rational(x));
    return out;
}

inline TMatrix tmat(const std::vector<std::vector<std::string>>& rows) {
    TMatrix m(int(rows.size()), int(rows[0].size()));
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c) m.at(int(r), int(c)) = tratfn_parse(rows[r][c]);
    return m;
}

inline TMatrix tmat(const std::vector<std::vector<long>>& rows) {
    TMatrix m(int(rows.size()), int(rows[0].size()));
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c) m.at(int(r), int(c)) = TRatFn(rows[r][c]);
    return m;
}

inline QMatrix qmat(const std::vector<std::vector<long>>& rows) {
    QMatrix m(int(rows.size()), int(rows[0].size()));
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c) m.at(int(r), int(c)) = Rational(rows[r][c]);
    return m;
}

inline IntMatrix imat(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(int(rows.size()), int(rows[0].size()));
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c) m.at(int(r), int(c)) = rows[r][c];
    return m;
}

}  // namespace tropfano::testutil
