#include "ladr/geometry.hpp"

#include <algorithm>
#include <set>

#include "ladr/error.hpp"

namespace ladr {

const Point& Layout::at(const std::string& id) const {
    auto it = centers_.find(id);
    if (it == centers_.end()) throw Error("layout has no rect '" + id + "'");
    return it->second;
}

Layout Layout::translated(const Rational& dx, const Rational& dy) const {
    Layout out;
    for (const auto& [id, p] : centers_) out.place(id, Point{p.x + dx, p.y + dy});
    return out;
}

Layout Layout::scaled(const Rational& factor) const {
    Layout out;
    for (const auto& [id, p] : centers_) out.place(id, Point{p.x * factor, p.y * factor});
    return out;
}

Instance::Instance(std::vector<Rect> rects, Layout initial)
    : rects_(std::move(rects)), initial_(std::move(initial)) {
    if (rects_.empty()) throw Error("instance has no rects");
    for (std::size_t i = 0; i < rects_.size(); ++i) {
        const Rect& r = rects_[i];
        if (r.id.empty()) throw Error("rect with empty id");
        if (r.w < 1 || r.h < 1)
            throw Error("rect '" + r.id + "' has non-positive dimensions");
        if (!index_.emplace(r.id, i).second) throw Error("duplicate rect id '" + r.id + "'");
        if (!initial_.has(r.id)) throw Error("initial layout missing rect '" + r.id + "'");
        max_w_ = std::max(max_w_, r.w);
        max_h_ = std::max(max_h_, r.h);
        total_w_ += r.w;
        total_h_ += r.h;
    }
    if (initial_.size() != rects_.size())
        throw Error("initial layout places unknown rect ids");
    std::set<std::pair<Rational, Rational>> seen;
    for (const auto& [id, p] : initial_.centers())
        if (!seen.emplace(p.x, p.y).second)
            throw Error("initial layout places two rects at the same center");
}

const Rect& Instance::rect(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw Error("unknown rect id '" + id + "'");
    return rects_[it->second];
}

bool intersects(const Rect& a, const Rect& b, const Layout& layout) {
    const Point& pa = layout.at(a.id);
    const Point& pb = layout.at(b.id);
    const Rational dx = pa.x >= pb.x ? pa.x - pb.x : pb.x - pa.x;
    const Rational dy = pa.y >= pb.y ? pa.y - pb.y : pb.y - pa.y;
    return 2 * dx < a.w + b.w && 2 * dy < a.h + b.h;
}

namespace {

void classify_axis(const std::map<std::string, Point>& centers, bool use_x,
                   std::vector<std::vector<std::string>>& classes,
                   std::map<std::string, int>& rank) {
    std::map<Rational, std::vector<std::string>> by_coord;
    for (const auto& [id, p] : centers) by_coord[use_x ? p.x : p.y].push_back(id);
    classes.clear();
    int r = 1;
    for (auto& [coord, ids] : by_coord) {
        (void)coord;
        std::sort(ids.begin(), ids.end());
        for (const auto& id : ids) rank[id] = r;
        classes.push_back(std::move(ids));
        ++r;
    }
}

}  // namespace

OrthoOrder compute_order(const Layout& layout) {
    OrthoOrder order;
    classify_axis(layout.centers(), true, order.x_classes, order.x_rank);
    classify_axis(layout.centers(), false, order.y_classes, order.y_rank);
    return order;
}

bool same_orthogonal_order(const Layout& a, const Layout& b) {
    if (a.size() != b.size()) throw Error("layouts place different rect sets");
    for (const auto& [id, p] : a.centers()) {
        (void)p;
        if (!b.has(id)) throw Error("layouts place different rect sets");
    }
    const OrthoOrder oa = compute_order(a);
    const OrthoOrder ob = compute_order(b);
    return oa.x_rank == ob.x_rank && oa.y_rank == ob.y_rank;
}

BBox bounding_box(const Instance& instance, const Layout& layout) {
    bool first = true;
    BBox box;
    for (const Rect& r : instance.rects()) {
        const Point& p = layout.at(r.id);
        const Rational left = p.x - rational(r.w, 2);
        const Rational right = p.x + rational(r.w, 2);
        const Rational bottom = p.y - rational(r.h, 2);
        const Rational top = p.y + rational(r.h, 2);
        if (first) {
            box = BBox{left, right, bottom, top};
            first = false;
        } else {
            box.left = std::min(box.left, left);
            box.right = std::max(box.right, right);
            box.bottom = std::min(box.bottom, bottom);
            box.top = std::max(box.top, top);
        }
    }
    return box;
}

}  // namespace ladr
