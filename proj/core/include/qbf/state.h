// Copyright 2026 The QBF Authors
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

#ifndef QBF_STATE_H
#define QBF_STATE_H

#include <algorithm>
#include <complex>
#include <stdexcept>
#include <vector>

#include "qbf/field_elem.h"
#include "qbf/gates.h"

namespace qbf {

inline FieldElem scale(const Scalar &c, const FieldElem &x) { return c * x; }
inline std::complex<double> scale(const std::complex<double> &c, const std::complex<double> &x) { return c * x; }
inline bool is_zero_amp(const Scalar &c) { return c.is_zero(); }
inline bool is_zero_amp(const FieldElem &x) { return x.is_zero(); }
inline bool is_zero_amp(const std::complex<double> &x) { return x == 0.0; }

/// Registers that have interacted share a group holding their joint amplitude
/// vector; the first register of a group is the most significant bit.
template <class Amp>
struct Group {
    std::vector<int> regs;
    std::vector<Amp> amps;

    int bit_of(int reg) const {
        for (size_t k = 0; k < regs.size(); k++) {
            if (regs[k] == reg) {
                return static_cast<int>(regs.size() - 1 - k);
            }
        }
        return -1;
    }
};

/// Product of independent groups. Amp is FieldElem for exact runs and
/// std::complex<double> for floating ones.
template <class Amp>
class GroupedState {
   public:
    std::vector<Group<Amp>> &groups() { return groups_; }
    const std::vector<Group<Amp>> &groups() const { return groups_; }

    void alloc(int reg, Amp a0, Amp a1) { groups_.push_back(Group<Amp>{{reg}, {std::move(a0), std::move(a1)}}); }

    size_t group_of(int reg) const {
        for (size_t g = 0; g < groups_.size(); g++) {
            if (groups_[g].bit_of(reg) >= 0) {
                return g;
            }
        }
        throw std::logic_error("register r" + std::to_string(reg) + " is not live");
    }

    /// Merges the groups of a and b (a's group first) and returns its index.
    size_t join(int a, int b) {
        size_t ga = group_of(a);
        size_t gb = group_of(b);
        if (ga == gb) {
            return ga;
        }
        Group<Amp> &x = groups_[ga];
        Group<Amp> &y = groups_[gb];
        Group<Amp> z;
        z.regs = x.regs;
        z.regs.insert(z.regs.end(), y.regs.begin(), y.regs.end());
        z.amps.reserve(x.amps.size() * y.amps.size());
        for (const Amp &u : x.amps) {
            for (const Amp &v : y.amps) {
                z.amps.push_back(u * v);
            }
        }
        size_t lo = std::min(ga, gb);
        size_t hi = std::max(ga, gb);
        groups_.erase(groups_.begin() + static_cast<long>(hi));
        groups_[lo] = std::move(z);
        return lo;
    }

    /// Applies a dim x dim row-major matrix to the listed registers.
    template <class Entry>
    void apply(const std::vector<Entry> &m, const std::vector<int> &regs) {
        size_t g = regs.size() == 2 ? join(regs[0], regs[1]) : group_of(regs[0]);
        Group<Amp> &grp = groups_[g];
        std::vector<int> bits;
        size_t mask = 0;
        for (int r : regs) {
            bits.push_back(grp.bit_of(r));
            mask |= size_t{1} << bits.back();
        }
        int dim = 1 << regs.size();
        std::vector<size_t> idx(dim);
        std::vector<Amp> in(dim);
        for (size_t base = 0; base < grp.amps.size(); base++) {
            if (base & mask) {
                continue;
            }
            for (int j = 0; j < dim; j++) {
                size_t at = base;
                for (size_t q = 0; q < regs.size(); q++) {
                    if (j & (1 << (regs.size() - 1 - q))) {
                        at |= size_t{1} << bits[q];
                    }
                }
                idx[j] = at;
                in[j] = grp.amps[at];
            }
            for (int row = 0; row < dim; row++) {
                Amp acc{};
                for (int col = 0; col < dim; col++) {
                    const Entry &e = m[row * dim + col];
                    if (is_zero_amp(e) || is_zero_amp(in[col])) {
                        continue;
                    }
                    acc = acc + scale(e, in[col]);
                }
                grp.amps[idx[row]] = std::move(acc);
            }
        }
    }

    /// Amplitudes of the branch where reg reads `outcome`, in group order with
    /// reg removed.
    std::vector<Amp> branch(int reg, int outcome) const {
        const Group<Amp> &grp = groups_[group_of(reg)];
        size_t bit = static_cast<size_t>(grp.bit_of(reg));
        std::vector<Amp> out;
        for (size_t i = 0; i < grp.amps.size(); i++) {
            if (((i >> bit) & 1) == static_cast<size_t>(outcome)) {
                out.push_back(grp.amps[i]);
            }
        }
        return out;
    }

    /// Keeps the branch where reg reads `outcome` and retires reg.
    void project(int reg, int outcome) {
        size_t g = group_of(reg);
        std::vector<Amp> kept = branch(reg, outcome);
        Group<Amp> &grp = groups_[g];
        std::vector<int> regs;
        for (int r : grp.regs) {
            if (r != reg) {
                regs.push_back(r);
            }
        }
        if (regs.empty()) {
            groups_.erase(groups_.begin() + static_cast<long>(g));
            return;
        }
        grp.regs = std::move(regs);
        grp.amps = std::move(kept);
    }

    /// Removes every group containing a register for which drop(reg) holds.
    template <class Pred>
    void drop_groups(Pred drop) {
        std::vector<Group<Amp>> keep;
        for (auto &grp : groups_) {
            bool any = false;
            for (int r : grp.regs) {
                any = any || drop(r);
            }
            if (!any) {
                keep.push_back(std::move(grp));
            }
        }
        groups_ = std::move(keep);
    }

    void clear() { groups_.clear(); }

   private:
    std::vector<Group<Amp>> groups_;
};

}  // namespace qbf

#endif  // QBF_STATE_H
