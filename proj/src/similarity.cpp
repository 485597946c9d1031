#include "polarsing/similarity.hpp"

#include <algorithm>
#include <vector>

#include <openssl/evp.h>

namespace polarsing {

namespace {

// Tag of a point relative to its parent: which proximity it shares.
char role_tag(const ArenaTree& tree, PointId p) {
    const auto& r = tree.record(p);
    if (!r.parent) return 'O';
    if (!r.second_proximity) return 'F';
    return r.second_proximity == tree.parent(*r.parent) ? 'G' : 'S';
}

std::string encode(const WeightedCluster& k, PointId p) {
    std::vector<std::string> kids;
    for (auto c : k.tree().children(p))
        if (k.contains(c)) kids.push_back(encode(k, c));
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    out += role_tag(k.tree(), p);
    out += k.weight(p).str();
    for (const auto& s : kids) out += s;
    out += ')';
    return out;
}

}  // namespace

std::string CanonicalForm::hex_digest() const {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

CanonicalForm canonical_form(const WeightedCluster& k) {
    CanonicalForm form;
    form.bytes = std::string(to_string(k.kind())) + ":";
    const auto o = k.tree().origin();
    if (o && k.contains(*o)) form.bytes += encode(k, *o);
    else form.bytes += "()";
    return form;
}

bool are_similar(const WeightedCluster& a, const WeightedCluster& b) {
    return canonical_form(a) == canonical_form(b);
}

bool are_equisingular(const CurveCluster& a, const CurveCluster& b) {
    return are_similar(a.cluster(), b.cluster());
}

}  // namespace polarsing
