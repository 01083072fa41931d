#include "clx/cl_ring.hpp"

#include <sstream>
#include <stdexcept>

namespace clx {

CLRing::CLRing(std::vector<ExtNat> degrees) : degrees_(std::move(degrees)) {
    for (size_t i = 0; i < degrees_.size(); ++i) {
        if (degrees_[i].is_finite() && degrees_[i].finite() < 2)
            throw std::invalid_argument("CLRing: finite degrees must be >= 2");
        if (i > 0 && degrees_[i] < degrees_[i - 1])
            throw std::invalid_argument("CLRing: degrees must be non-decreasing");
    }
}

int CLRing::finite_count() const {
    int c = 0;
    for (const auto& d : degrees_)
        if (d.is_finite()) ++c;
    return c;
}

CLRing CLRing::bar() const {
    if (!projective() || varcount() < 2)
        throw std::logic_error("CLRing::bar: needs a projective ring with >= 2 variables");
    std::vector<ExtNat> ds(degrees_.begin(), degrees_.end() - 2);
    ds.push_back(ExtNat::inf());
    return CLRing(std::move(ds));
}

CLRing CLRing::tilde() const {
    if (!projective())
        throw std::logic_error("CLRing::tilde: needs a projective ring");
    std::vector<ExtNat> ds(degrees_.begin(), degrees_.end() - 1);
    return CLRing(std::move(ds));
}

CLRing CLRing::ambient() const {
    return CLRing(std::vector<ExtNat>(degrees_.size(), ExtNat::inf()));
}

std::string CLRing::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < degrees_.size(); ++i) {
        if (i) os << ',';
        os << degrees_[i].str();
    }
    return os.str();
}

CLRing CLRing::parse(std::string_view text) {
    std::vector<ExtNat> ds;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        // trim spaces
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        if (tok.empty()) throw std::invalid_argument("CLRing::parse: empty entry");
        if (tok == "inf") {
            ds.push_back(ExtNat::inf());
        } else {
            int v = 0;
            for (char ch : tok) {
                if (ch < '0' || ch > '9')
                    throw std::invalid_argument("CLRing::parse: bad degree '" + std::string(tok) + "'");
                v = v * 10 + (ch - '0');
                if (v > 1000000) throw std::invalid_argument("CLRing::parse: degree too large");
            }
            ds.push_back(ExtNat(v));
        }
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return CLRing(std::move(ds));
}

} // namespace clx
