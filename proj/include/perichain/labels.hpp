#pragma once

#include <compare>
#include <string>

#include "perichain/error.hpp"

namespace perichain {

/// Names a basis generator. E(i,j) and H(i,k) label the gl/sl basis;
/// HP(k), HR(k) and Hperp(i) label the peripheric/Reshetikhin/orthogonal
/// Cartan combinations (resolved to elements by the owning algebra);
/// Abstract(name) labels generators of the small abstract algebras.
struct GenLabel {
    enum class Kind : unsigned char { E, H, HP, HR, Hperp, Abstract };

    Kind kind = Kind::Abstract;
    int i = 0;
    int j = 0;
    std::string name;

    static GenLabel E(int i, int j) { return {Kind::E, i, j, {}}; }
    static GenLabel H(int i, int k) { return {Kind::H, i, k, {}}; }
    static GenLabel HP(int k) { return {Kind::HP, k, 0, {}}; }
    static GenLabel HR(int k) { return {Kind::HR, k, 0, {}}; }
    static GenLabel Hperp(int i) { return {Kind::Hperp, i, 0, {}}; }
    static GenLabel abstract(std::string n) { return {Kind::Abstract, 0, 0, std::move(n)}; }

    friend bool operator==(const GenLabel&, const GenLabel&) = default;
    friend auto operator<=>(const GenLabel&, const GenLabel&) = default;

    std::string str() const {
        switch (kind) {
            case Kind::E: return "E_{" + std::to_string(i) + "," + std::to_string(j) + "}";
            case Kind::H: return "H_{" + std::to_string(i) + "," + std::to_string(j) + "}";
            case Kind::HP: return "HP_" + std::to_string(i);
            case Kind::HR: return "HR_" + std::to_string(i);
            case Kind::Hperp: return "Hperp_" + std::to_string(i);
            case Kind::Abstract: return name;
        }
        return {};
    }
};

} // namespace perichain
