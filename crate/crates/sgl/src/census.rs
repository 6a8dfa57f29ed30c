//! The built-in census of small p-groups, as group expressions.

pub const CATALOG: &[&str] = &[
    // order 2, 4
    "C2",
    "C4",
    "C2 x C2",
    // order 8
    "C8",
    "C4 x C2",
    "C2 x C2 x C2",
    "D8",
    "Q8",
    "C2 wr C2",
    "C4 : C2 [inv]",
    // order 16
    "C16",
    "C8 x C2",
    "C4 x C4",
    "C4 x C2 x C2",
    "Ab(2,2,2,2)",
    "D8 x C2",
    "Q8 x C2",
    "D16",
    "Q16",
    "SD16",
    "M16",
    "C4 : C4 [inv]",
    "(C2 x C2) : C4 [perm:(1 2)]",
    "C8 : C2 [perm:(1 5)(3 7)]",
    // order 32
    "C32",
    "C16 x C2",
    "C8 x C4",
    "C8 x C2 x C2",
    "C4 x C4 x C2",
    "Ab(4,2,2,2)",
    "Ab(2,2,2,2,2)",
    "D32",
    "Q32",
    "SD32",
    "M32",
    "D8 x C4",
    "Q8 x C4",
    "D8 x C2 x C2",
    "Q8 x C2 x C2",
    "D16 x C2",
    "Q16 x C2",
    "SD16 x C2",
    "M16 x C2",
    "C4 wr C2",
    "(C2 x C2) wr C2",
    "C8 : C4 [inv]",
    "(C4 x C2) : C4 [perm:(1 3)(5 7)]",
    // p = 3
    "C3",
    "C9",
    "C3 x C3",
    "C27",
    "C9 x C3",
    "C3 x C3 x C3",
    "He3",
    "C9 : C3 [perm:(1 4 7)(2 8 5)]",
    "C3 wr C3",
    // order 64
    "C2 wr C4",
    "C2 wr (C2 x C2)",
    "D8 x D8",
    "Q8 x Q8",
    "D8 x Q8",
];
