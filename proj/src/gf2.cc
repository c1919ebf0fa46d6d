// Copyright 2026 The bellrate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bellrate/gf2.h"

#include <algorithm>
#include <stdexcept>

namespace bellrate {

LabelIndex Gf2Span::reduce(LabelIndex v) const {
    for (LabelIndex b : basis_) {
        LabelIndex lead = std::bit_floor(b);
        if (v & lead) {
            v ^= b;
        }
    }
    return v;
}

bool Gf2Span::insert(LabelIndex v) {
    v = reduce(v);
    if (v == 0) {
        return false;
    }
    LabelIndex lead = std::bit_floor(v);
    for (LabelIndex &b : basis_) {
        if (b & lead) {
            b ^= v;
        }
    }
    basis_.push_back(v);
    std::sort(basis_.begin(), basis_.end(), std::greater<>());
    return true;
}

std::vector<LabelIndex> Gf2Span::elements() const {
    std::vector<LabelIndex> out{0};
    for (LabelIndex b : basis_) {
        size_t n = out.size();
        for (size_t k = 0; k < n; k++) {
            out.push_back(out[k] ^ b);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<LabelIndex> symplectic_basis(size_t pairs, std::vector<LabelIndex> vectors) {
    std::vector<LabelIndex> out;
    while (true) {
        auto e_it = std::find_if(vectors.begin(), vectors.end(), [](LabelIndex v) { return v != 0; });
        if (e_it == vectors.end()) {
            return out;
        }
        LabelIndex e = *e_it;
        *e_it = 0;
        auto f_it = std::find_if(vectors.begin(), vectors.end(), [&](LabelIndex v) {
            return symplectic_form(pairs, e, v) == 1;
        });
        if (f_it == vectors.end()) {
            throw std::invalid_argument("symplectic_basis: the spanned subspace is degenerate.");
        }
        LabelIndex f = *f_it;
        *f_it = 0;
        out.push_back(e);
        out.push_back(f);
        for (LabelIndex &v : vectors) {
            LabelIndex w = v;
            if (symplectic_form(pairs, v, f)) {
                w ^= e;
            }
            if (symplectic_form(pairs, v, e)) {
                w ^= f;
            }
            v = w;
        }
    }
}

}  // namespace bellrate
