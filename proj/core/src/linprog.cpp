/*
   Copyright 2026 The hecke authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "hecke/linprog.hpp"

#include <stdexcept>

namespace hecke {

HullResult zero_in_hull(const std::vector<std::vector<BigRat>>& points) {
    if (points.empty()) {
        HullResult r;
        r.inside = false;
        return r;
    }
    const std::size_t d = points[0].size();
    const std::size_t m = points.size();
    const std::size_t rows = d + 1;     // sum lambda_i p_i = 0, sum lambda_i = 1
    const std::size_t cols = m + rows;  // lambda columns, then artificials

    // Phase-1 tableau: minimize the artificial sum. Column j < m is
    // [p_j; 1]; artificial columns are the identity. b = (0,...,0,1) >= 0.
    std::vector<std::vector<BigRat>> t(rows, std::vector<BigRat>(cols + 1, 0));
    for (std::size_t j = 0; j < m; ++j) {
        if (points[j].size() != d) throw std::invalid_argument("zero_in_hull: ragged points");
        for (std::size_t i = 0; i < d; ++i) t[i][j] = points[j][i];
        t[d][j] = 1;
    }
    for (std::size_t i = 0; i < rows; ++i) t[i][m + i] = 1;
    t[d][cols] = 1;

    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) basis[i] = m + i;

    // Reduced-cost row for cost = sum of artificials: r_j = c_j - sum over
    // rows of t[i][j]; objective value z = sum of b.
    std::vector<BigRat> red(cols, 0);
    BigRat z = 0;
    for (std::size_t j = 0; j < cols; ++j) {
        BigRat s = 0;
        for (std::size_t i = 0; i < rows; ++i) s += t[i][j];
        red[j] = (j >= m ? BigRat(1) : BigRat(0)) - s;
    }
    for (std::size_t i = 0; i < rows; ++i) z += t[i][cols];

    while (true) {
        // Bland: smallest index with negative reduced cost.
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (red[j] < 0) {
                enter = j;
                break;
            }
        if (enter == cols) break;
        // Ratio test, smallest basis index on ties.
        std::size_t leave = rows;
        BigRat best;
        for (std::size_t i = 0; i < rows; ++i) {
            if (t[i][enter] <= 0) continue;
            const BigRat ratio = t[i][cols] / t[i][enter];
            if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == rows) throw std::logic_error("zero_in_hull: unbounded phase-1");
        // Pivot.
        const BigRat piv = t[leave][enter];
        for (std::size_t j = 0; j <= cols; ++j) t[leave][j] /= piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const BigRat f = t[i][enter];
            for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
        }
        const BigRat fr = red[enter];
        if (fr != 0) {
            for (std::size_t j = 0; j < cols; ++j) red[j] -= fr * t[leave][j];
            z += fr * t[leave][cols];
        }
        basis[leave] = enter;
    }

    HullResult res;
    if (z == 0) {
        res.inside = true;
        return res;
    }
    // Farkas certificate from the simplex multipliers: reduced cost of
    // artificial i is 1 - y_i, and y^T [p; 1] <= 0 with y_{d+1} = z > 0,
    // which after scaling gives the strict separator.
    res.inside = false;
    res.separator.resize(d);
    for (std::size_t i = 0; i < d; ++i) res.separator[i] = (BigRat(1) - red[m + i]) / z;
    return res;
}

}  // namespace hecke
