#pragma once

#include <string>
#include <utility>
#include <vector>

#include "khtor/homology.hpp"
#include "khtor/torsion.hpp"

namespace khtor {

enum class Format { text, json, csv };

Format parse_format(const std::string& s);

// rtorsion text mirrors the table row shape: [c1 c2 ... ck tau "q"], one row
// per polynomial degree, descending.
std::string render_torsion(const TorsionReport& r, Format f);
std::string render_homology(const IntegralCohomology& h, const std::string& name, Format f);
std::string render_jones(const Laurent& p, const std::string& name, Format f);

struct CorpusEntry {
    std::string name;
    std::string pd;
};

// Bundled diagram table, parsed from the embedded data file.
const std::vector<CorpusEntry>& corpus_entries();

struct ExpectedRow {
    int q = 0;
    Rat torsion;
};
using ExpectedTable = std::vector<std::pair<std::string, std::vector<ExpectedRow>>>;

// name<TAB>q<TAB>p/q per line, rows of one name contiguous.
ExpectedTable parse_expected_tsv(const std::string& text);
const std::string& bundled_expected_tsv();

}  // namespace khtor
