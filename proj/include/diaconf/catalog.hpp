#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diaconf/algebra.hpp"

namespace diaconf {

// Curated small algebras and dialgebras (dims 1-4) used as test anchors
// and addressable from the CLI as catalog:<name>.
struct CatalogEntry {
    std::string name;
    std::string kind;  // "algebra" or "dialgebra"
    std::string note;
    std::optional<Algebra> algebra;
    std::optional<Dialgebra> dialgebra;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* catalog_find(const std::string& name);

// Every catalog entry as a dialgebra: dialgebra entries as-is, Leibniz
// algebras through the bracket translation, other algebras with |- = -|.
std::vector<std::pair<std::string, Dialgebra>> catalog_dialgebras();

// Single-product Leibniz algebras of the catalog (Lie algebras included).
std::vector<std::pair<std::string, Algebra>> catalog_leibniz();

// Di-Jordan algebras, with the nilpotency split used by the TKK tests.
struct DiJordanSample {
    std::string name;
    Algebra algebra;
    bool nilpotent;
};
std::vector<DiJordanSample> catalog_di_jordan();

std::vector<std::pair<std::string, Algebra>> catalog_jordan();

}  // namespace diaconf
