"""Published slope tables for q = 2, k = 0..8.

Keys are (i, level); values list the cells for k = 0, 1, ..., 8 in the
"slope^mult" notation accepted by ``slopes.parse_cell``.
"""

TABLE_1 = {
    (1, "gl3"): [
        "", "", "", "",
        "1^1",
        "2^1",
        "1^1",
        "3/2^2",
        "1^1, 2^1",
    ],
    (1, "p0"): [
        "",
        "∞^1",
        "1^1, ∞^1",
        "3/2^2, ∞^1",
        "1^1, 2^1, ∞^3",
        "2^1, 5/2^2, ∞^4",
        "1^1, 3^3, ∞^5",
        "3/2^2, 7/2^2, 4^1, ∞^7",
        "1^1, 2^1, 4^3, 5^1, ∞^9",
    ],
    (1, "p2"): [
        "",
        "0^1",
        "0^1, 1^1",
        "0^1, 3/2^2",
        "0^1, 1^2, 2^1, ∞^1",
        "0^1, 2^3, 5/2^2, ∞^1",
        "0^1, 1^2, 3^5, ∞^1",
        "0^1, 3/2^4, 2^1, 7/2^2, 4^2, ∞^2",
        "0^1, 1^2, 2^2, 8/3^3, 4^3, 5^1, 8^1, ∞^2",
    ],
    (1, "gamma0"): [
        "0^1",
        "0^1, ∞^2",
        "0^1, 1^2, ∞^3",
        "0^1, 3/2^4, 2^1, ∞^4",
        "0^1, 1^2, 2^2, 8/3^3, ∞^7",
        "0^1, 2^3, 5/2^4, 10/3^3, ∞^10",
        "0^1, 1^2, 3^8, 4^4, ∞^13",
        "0^1, 3/2^4, 2^1, 7/2^4, 4^3, 14/3^6, ∞^17",
        "0^1, 1^2, 2^2, 8/3^3, 4^6, 5^2, 16/3^6, 8^1, ∞^22",
    ],
}

TABLE_2 = {
    (2, "gl3"): [
        "", "", "", "",
        "0^1",
        "0^1",
        "0^1",
        "0^2",
        "0^2",
    ],
    (2, "p0"): [
        "",
        "0^1",
        "0^2",
        "0^3",
        "0^4, ∞^1",
        "0^5, 1^1, ∞^1",
        "0^6, 3/2^2, ∞^1",
        "0^7, 1^2, 2^1, ∞^2",
        "0^8, 4/3^3, 2^1, 4^1, ∞^2",
    ],
    (2, "p2"): [
        "",
        "0^1",
        "0^1, ∞^1",
        "0^1, ∞^2",
        "0^2, ∞^3",
        "0^2, 1^1, ∞^4",
        "0^2, 3/2^2, ∞^5",
        "0^3, 1^1, 2^1, ∞^7",
        "0^3, 4/3^3, 4^1, ∞^8",
    ],
    (2, "gamma0"): [
        "0^1",
        "0^2, ∞^1",
        "0^3, ∞^3",
        "0^4, 1^1, ∞^5",
        "0^5, 4/3^3, ∞^7",
        "0^6, 1^2, 5/3^3, ∞^10",
        "0^7, 3/2^4, 2^4, ∞^13",
        "0^8, 1^3, 2^2, 7/3^6, ∞^17",
        "0^9, 4/3^6, 2^1, 8/3^6, 4^2, ∞^21",
    ],
}
