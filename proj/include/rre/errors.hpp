#pragma once

#include <stdexcept>
#include <string>

namespace rre {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct empty_category_error : error {
    empty_category_error() : error("training category is empty") {}
};

struct dimension_mismatch_error : error {
    explicit dimension_mismatch_error(const std::string& what) : error(what) {}
};

struct negative_threshold_error : error {
    negative_threshold_error() : error("rejection threshold must be non-negative") {}
};

struct filter_precondition_error : error {
    filter_precondition_error()
        : error("filter requires a model that classifies all of its training points correctly") {}
};

struct invalid_grid_error : error {
    explicit invalid_grid_error(const std::string& what) : error(what) {}
};

struct empty_input_error : error {
    explicit empty_input_error(const std::string& what) : error(what) {}
};

struct singular_kernel_error : error {
    singular_kernel_error() : error("kernel matrix is singular") {}
};

struct mixed_categories_missing_error : error {
    mixed_categories_missing_error()
        : error("support vectors must span both categories") {}
};

struct unknown_dataset_error : error {
    explicit unknown_dataset_error(const std::string& name)
        : error("unknown dataset: " + name) {}
};

struct malformed_row_error : error {
    explicit malformed_row_error(const std::string& what) : error(what) {}
};

struct non_integral_split_error : error {
    explicit non_integral_split_error(const std::string& what) : error(what) {}
};

struct sink_failure_error : error {
    explicit sink_failure_error(const std::string& what) : error(what) {}
};

struct parse_error : error {
    explicit parse_error(const std::string& what) : error(what) {}
};

} // namespace rre
