#include "docmine/errors.hpp"

namespace docmine {

IoError::IoError(const std::filesystem::path& path, const std::string& what)
    : Error(path.string() + ": " + what), path_(path) {}

}  // namespace docmine
