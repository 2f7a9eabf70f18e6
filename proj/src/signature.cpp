#include "curvecat/signature.hpp"

#include <algorithm>

#include "curvecat/errors.hpp"

namespace curvecat {

Signature::Signature(Int genus_of_quotient, std::vector<Int> ramification_indices)
    : quotient_genus(genus_of_quotient), indices(std::move(ramification_indices)) {
    if (quotient_genus < 0) throw structural_error("negative quotient genus");
    std::sort(indices.begin(), indices.end());
    for (Int v : indices)
        if (v < 2) throw structural_error("ramification index < 2");
}

std::string Signature::to_string() const {
    std::string s = "(" + std::to_string(quotient_genus) + "; ";
    if (indices.empty()) {
        s += "-";
    } else {
        for (std::size_t i = 0; i < indices.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(indices[i]);
        }
    }
    return s + ")";
}

Rational reduced_euler(const Signature& sig) {
    Rational mu(2 * sig.quotient_genus - 2);
    for (Int v : sig.indices) mu += Rational(1) - Rational(1, v);
    return mu;
}

std::optional<Int> genus_from_order(const Signature& sig, Int order) {
    if (order < 1) throw domain_error("order must be >= 1");
    Rational doubled = Rational(order) * reduced_euler(sig);  // 2g - 2
    if (!doubled.is_integer()) return std::nullopt;
    Int t = checked_add(doubled.numerator(), 2);
    if (t % 2 != 0) return std::nullopt;
    Int g = t / 2;
    if (g < 2) return std::nullopt;
    return g;
}

bool is_large(Int order, Int genus) {
    if (genus < 2) throw domain_error("largeness is defined for genus >= 2");
    return order > 4 * (genus - 1);
}

Signature SignatureFamily::at(Int t) const {
    if (!in_range(t)) throw domain_error("family parameter out of range");
    std::vector<Int> idx = fixed_indices;
    idx.push_back(index_at(t));
    return Signature(quotient_genus, std::move(idx));
}

std::string SignatureFamily::to_string() const {
    std::string s = "{";
    for (Int v : fixed_indices) s += std::to_string(v) + ",";
    if (param_coeff == 1 && param_offset == 0) {
        s += "n}";
    } else {
        s += std::to_string(param_coeff) + "n";
        if (param_offset > 0) s += "+" + std::to_string(param_offset);
        if (param_offset < 0) s += std::to_string(param_offset);
        s += "}";
    }
    s += ", n >= " + std::to_string(param_min);
    if (param_max) s += ", n <= " + std::to_string(*param_max);
    return s;
}

std::vector<Signature> expand_family(const SignatureFamily& fam, Int max_param) {
    std::vector<Signature> out;
    Int hi = fam.param_max ? std::min(*fam.param_max, max_param) : max_param;
    for (Int t = fam.param_min; t <= hi; ++t) out.push_back(fam.at(t));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace curvecat
