#pragma once
// Error taxonomy shared by the library and the CLI exit-code contract:
// FileError -> I/O failure (unreadable/unwritable path), everything else
// derived from Error -> domain failure (bad records, invalid parameters,
// inconsistent inputs).

#include <stdexcept>
#include <string>

namespace botcut {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Could not open/read/write a file at all.
struct FileError : Error {
    using Error::Error;
};

// A record inside an otherwise readable input is malformed; message carries
// the 1-based line number where applicable.
struct InputError : Error {
    using Error::Error;
};

}  // namespace botcut
