//! The guide in `book/`, compiled so that its listings run as doctests.

macro_rules! chapter {
    ($name:ident, $file:literal) => {
        #[doc = include_str!(concat!("../../../book/src/", $file))]
        pub mod $name {}
    };
}

chapter!(introduction, "introduction.md");
chapter!(representation, "representation.md");
chapter!(rounding, "rounding.md");
chapter!(arithmetic, "arithmetic.md");
chapter!(text, "text.md");
chapter!(functions, "functions.md");
chapter!(verification, "verification.md");
chapter!(nozcalc, "nozcalc.md");
