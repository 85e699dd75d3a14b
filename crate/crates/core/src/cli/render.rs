//! Text renderings of solved tables.

use std::fmt::Write;

use crate::board::Position;
use crate::solver::SolveTable;

const PBM_LINE: usize = 70;

/// `x,y` header then one row per P-position, lexicographic.
pub fn csv(table: &SolveTable) -> String {
    let mut s = String::from("x,y\n");
    for p in table.p_positions() {
        writeln!(s, "{},{}", p.x, p.y).unwrap();
    }
    s
}

/// Board rows from `y = X` down to `y = 0`, `x` left to right, P = 1.
fn rows(table: &SolveTable) -> impl Iterator<Item = String> + '_ {
    let n = table.bound();
    (0..=n).rev().map(move |y| {
        (0..=n).map(|x| if table.is_p(Position::new(x, y)) { '1' } else { '0' }).collect()
    })
}

pub fn matrix(table: &SolveTable) -> String {
    rows(table).map(|r| r + "\n").collect()
}

/// Plain PBM (`P1`), lines wrapped at 70 characters.
pub fn pbm(table: &SolveTable) -> String {
    let side = table.bound() + 1;
    let mut s = format!("P1\n{side} {side}\n");
    for row in rows(table) {
        for chunk in row.as_bytes().chunks(PBM_LINE) {
            s.push_str(std::str::from_utf8(chunk).unwrap());
            s.push('\n');
        }
    }
    s
}

/// Reads back the P-set from a PBM produced by [`pbm`].
pub fn pbm_points(text: &str) -> Option<Vec<Position>> {
    let mut lines = text.lines();
    if lines.next()? != "P1" {
        return None;
    }
    let mut dims = lines.next()?.split_whitespace().map(|t| t.parse::<u64>().ok());
    let (w, h) = (dims.next()??, dims.next()??);
    let bits: Vec<u8> = lines.flat_map(|l| l.bytes()).filter(|b| !b.is_ascii_whitespace()).collect();
    if bits.len() as u64 != w * h {
        return None;
    }
    let mut out = Vec::new();
    for (i, &b) in bits.iter().enumerate() {
        let (row, x) = (i as u64 / w, i as u64 % w);
        if b == b'1' {
            out.push(Position::new(x, h - 1 - row));
        }
    }
    out.sort();
    Some(out)
}
