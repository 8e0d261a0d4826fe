#include "core/cots.hpp"

namespace fintopo {

namespace {

std::vector<std::string> cots_labels(int n) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    if (n <= 26) {
        for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
    } else {
        for (int i = 0; i < n; ++i) labels.push_back("q" + std::to_string(i));
    }
    return labels;
}

}  // namespace

CotsQuotient::CotsQuotient(std::vector<Rational> cuts) : cuts_(std::move(cuts)) {
    if (cuts_.size() < 2 || cuts_.front() != 0 || cuts_.back() != 1)
        throw domain_error(errc::invalid_argument,
                           "cuts must run from 0 to 1 with at least those two");
    for (std::size_t i = 0; i + 1 < cuts_.size(); ++i)
        if (!(cuts_[i] < cuts_[i + 1]))
            throw domain_error(errc::invalid_argument, "cuts must be strictly increasing");
    const int n = 2 * static_cast<int>(cuts_.size()) - 1;
    if (n > PointSet::max_points)
        throw domain_error(errc::n_out_of_range, "too many cuts for a 64-point space");

    std::vector<PointSet> nbhd(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        PointSet u = PointSet::single(i);
        if (i % 2 == 0) {  // cut point: adjacent interval points are above it
            if (i - 1 >= 0) u |= PointSet::single(i - 1);
            if (i + 1 < n) u |= PointSet::single(i + 1);
        }
        nbhd[static_cast<std::size_t>(i)] = u;
    }
    space_ = Space::from_minbase(n, nbhd, cots_labels(n));
}

CotsQuotient CotsQuotient::parse(std::string_view text) {
    std::vector<Rational> cuts;
    std::size_t i = 0;
    while (i <= text.size()) {
        std::size_t j = i;
        while (j < text.size() && text[j] != ',') ++j;
        std::string_view tok = text.substr(i, j - i);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        if (tok.empty())
            throw domain_error(errc::parse, "empty entry in cut list");
        cuts.push_back(parse_rational(tok));
        if (j == text.size()) break;
        i = j + 1;
    }
    return CotsQuotient(std::move(cuts));
}

RationalInterval CotsQuotient::fiber(int i) const {
    if (i % 2 == 0) return RationalInterval::point(cuts_[static_cast<std::size_t>(i / 2)]);
    return {cuts_[static_cast<std::size_t>(i / 2)], cuts_[static_cast<std::size_t>(i / 2 + 1)],
            false, false};
}

PointSet CotsQuotient::project(const RationalIntervalSet& s) const {
    PointSet out;
    for (int i = 0; i < point_count(); ++i)
        if (s.intersects(fiber(i))) out |= PointSet::single(i);
    return out;
}

PointSet CotsQuotient::project_point(const Rational& x) const {
    for (int i = 0; i < point_count(); ++i)
        if (fiber(i).contains(x)) return PointSet::single(i);
    throw domain_error(errc::out_of_domain, format_rational(x) + " is outside [0,1]");
}

Multifunction CotsQuotient::induced(const PiecewiseLinear& f) const {
    std::vector<PointSet> image;
    image.reserve(static_cast<std::size_t>(point_count()));
    for (int y = 0; y < point_count(); ++y)
        image.push_back(project(f.image(fiber(y))));
    return {space_, space_, std::move(image)};
}

}  // namespace fintopo
