#include <gtest/gtest.h>

#include "idcode/codespec.hpp"
#include "idcode/constructions.hpp"

using namespace idcode;

namespace {

CodespecError::Kind error_kind(const std::string& text) {
    try {
        parse_codespec(text);
    } catch (const CodespecError& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error for:\n" << text;
    return CodespecError::Kind::malformed_line;
}

}  // namespace

TEST(Codespec, ParsesFig10) {
    const PeriodicCode c = parse_codespec("codespec v1\nbasis 3 0 0 3\npoint 2 1\npoint 0 2\n");
    EXPECT_EQ(c, builtin_code("fig10-sqrt5").code);
}

TEST(Codespec, CommentsBlankLinesAndCrlf) {
    const PeriodicCode c =
        parse_codespec("# a comment\r\n\r\ncodespec v1   # trailing\r\nbasis 3 0 0 3\r\n  point 5 -2\r\npoint 0 2\r\n");
    EXPECT_EQ(c, builtin_code("fig10-sqrt5").code);
}

TEST(Codespec, SerializeIsCanonical) {
    EXPECT_EQ(serialize_codespec(builtin_code("fig10-sqrt5").code), "codespec v1\nbasis 3 0 0 3\npoint 0 2\npoint 2 1\n");
}

TEST(Codespec, RoundTripOnBuiltinsAndConstructions) {
    std::vector<PeriodicCode> codes;
    for (const std::string& name : builtin_names()) codes.push_back(builtin_code(name).code);
    codes.push_back(construct_diag(4, 6, true));
    codes.push_back(construct_int_half(3));
    for (const PeriodicCode& c : codes) {
        const std::string text = serialize_codespec(c);
        EXPECT_EQ(parse_codespec(text), c);
        EXPECT_EQ(serialize_codespec(parse_codespec(text)), text);
    }
}

TEST(Codespec, DistinctErrorKinds) {
    using K = CodespecError::Kind;
    EXPECT_EQ(error_kind(""), K::missing_header);
    EXPECT_EQ(error_kind("basis 1 0 0 1\n"), K::missing_header);
    EXPECT_EQ(error_kind("codespec v1\n"), K::missing_basis);
    EXPECT_EQ(error_kind("codespec v1\npoint 0 0\n"), K::missing_basis);
    EXPECT_EQ(error_kind("codespec v1\nbasis 1 0 0\n"), K::malformed_line);
    EXPECT_EQ(error_kind("codespec v1\nbasis 1 0 0 x\n"), K::malformed_line);
    EXPECT_EQ(error_kind("codespec v1\nbasis 1 0 0 1\nvertex 0 0\n"), K::malformed_line);
    EXPECT_EQ(error_kind("codespec v1\nbasis 2 0 4 0\n"), K::dependent_basis);
    EXPECT_EQ(error_kind("codespec v1\nbasis 2 0 0 2\npoint 0 0\npoint 2 2\n"), K::duplicate_residue);
}

TEST(Codespec, ErrorNamesLine) {
    try {
        parse_codespec("codespec v1\nbasis 2 0 0 2\npoint 0 0\n\npoint 2 2\n");
        FAIL();
    } catch (const CodespecError& e) {
        EXPECT_EQ(e.line(), 5u);
    }
}
