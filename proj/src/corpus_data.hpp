#pragma once

// Accessors for the table data embedded at configure time.

namespace khtor::detail {

const char* corpus_tsv();
const char* expected_tsv();

}  // namespace khtor::detail
