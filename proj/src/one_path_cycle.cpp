#include "ecg/one_path_cycle.hpp"

#include <algorithm>

namespace ecg {

ParamOnePathCycle::ParamOnePathCycle(const EdgeColouredGraph& host, std::vector<VertexId> path,
                                     std::vector<std::vector<VertexId>> cycles, AnchoredVertex x,
                                     AnchoredVertex y, Rational rho)
    : host_(&host), path_(std::move(path)), cycles_(std::move(cycles)), x_(x), y_(y),
      rho_(std::move(rho)) {
    index();
}

void ParamOnePathCycle::index() {
    comp_of_.assign(static_cast<size_t>(host_->n()), -1);
    pos_of_.assign(static_cast<size_t>(host_->n()), -1);
    for (size_t i = 0; i < path_.size(); ++i) {
        comp_of_[static_cast<size_t>(path_[i])] = 0;
        pos_of_[static_cast<size_t>(path_[i])] = static_cast<int>(i);
    }
    for (size_t c = 0; c < cycles_.size(); ++c)
        for (size_t i = 0; i < cycles_[c].size(); ++i) {
            comp_of_[static_cast<size_t>(cycles_[c][i])] = static_cast<int>(c) + 1;
            pos_of_[static_cast<size_t>(cycles_[c][i])] = static_cast<int>(i);
        }
}

int ParamOnePathCycle::order() const {
    size_t total = path_.size();
    for (const auto& c : cycles_) total += c.size();
    return static_cast<int>(total);
}

std::vector<VertexId> ParamOnePathCycle::vertex_set() const {
    std::vector<VertexId> vs = path_;
    for (const auto& c : cycles_) vs.insert(vs.end(), c.begin(), c.end());
    std::sort(vs.begin(), vs.end());
    return vs;
}

int ParamOnePathCycle::comp_of(VertexId v) const {
    host_->check_vertex(v);
    return comp_of_[static_cast<size_t>(v)];
}

int ParamOnePathCycle::pos_of(VertexId v) const {
    host_->check_vertex(v);
    return pos_of_[static_cast<size_t>(v)];
}

VertexId ParamOnePathCycle::succ(VertexId v) const {
    int c = comp_of(v), p = pos_of(v);
    if (c < 0) fail("NotInStructure", "vertex not in structure");
    if (c == 0) {
        if (p + 1 >= static_cast<int>(path_.size())) return -1;
        return path_[static_cast<size_t>(p + 1)];
    }
    const auto& cyc = cycles_[static_cast<size_t>(c - 1)];
    return cyc[static_cast<size_t>((p + 1) % static_cast<int>(cyc.size()))];
}

VertexId ParamOnePathCycle::pred(VertexId v) const {
    int c = comp_of(v), p = pos_of(v);
    if (c < 0) fail("NotInStructure", "vertex not in structure");
    if (c == 0) {
        if (p == 0) return -1;
        return path_[static_cast<size_t>(p - 1)];
    }
    const auto& cyc = cycles_[static_cast<size_t>(c - 1)];
    int sz = static_cast<int>(cyc.size());
    return cyc[static_cast<size_t>((p - 1 + sz) % sz)];
}

ColourId ParamOnePathCycle::c_plus(VertexId v) const {
    VertexId s = succ(v);
    if (s < 0) return kNoColour;
    return host_->colour_of(v, s).value();
}

ColourId ParamOnePathCycle::c_minus(VertexId v) const {
    VertexId p = pred(v);
    if (p < 0) return kNoColour;
    return host_->colour_of(v, p).value();
}

std::vector<ColourId> ParamOnePathCycle::colours_at(VertexId v) const {
    std::vector<ColourId> out;
    if (ColourId c = c_minus(v); c != kNoColour) out.push_back(c);
    if (ColourId c = c_plus(v); c != kNoColour) out.push_back(c);
    return out;
}

int ParamOnePathCycle::dist_h(VertexId a, VertexId b) const {
    int ca = comp_of(a), cb = comp_of(b);
    if (ca < 0 || cb < 0 || ca != cb) return kInfDist;
    int d = std::abs(pos_of(a) - pos_of(b));
    if (ca == 0) return d;
    int len = static_cast<int>(cycles_[static_cast<size_t>(ca - 1)].size());
    return std::min(d, len - d);
}

std::vector<std::pair<VertexId, VertexId>> ParamOnePathCycle::edge_list() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (size_t i = 0; i + 1 < path_.size(); ++i) out.emplace_back(path_[i], path_[i + 1]);
    for (const auto& cyc : cycles_)
        for (size_t i = 0; i < cyc.size(); ++i) out.emplace_back(cyc[i], cyc[(i + 1) % cyc.size()]);
    return out;
}

ParamOnePathCycle ParamOnePathCycle::reversed() const {
    std::vector<VertexId> rpath(path_.rbegin(), path_.rend());
    std::vector<std::vector<VertexId>> rcycles;
    for (const auto& cyc : cycles_) {
        // Keep the anchor vertex of the sequence, reverse the travel direction.
        std::vector<VertexId> r;
        r.push_back(cyc[0]);
        for (size_t i = cyc.size(); i > 1; --i) r.push_back(cyc[i - 1]);
        rcycles.push_back(std::move(r));
    }
    return ParamOnePathCycle(*host_, std::move(rpath), std::move(rcycles), y_, x_, rho_);
}

} // namespace ecg
