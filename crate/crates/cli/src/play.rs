//! Human vs. engine on a single heap. The human moves first.

use std::io::{self, BufRead, Write};

use comply_core::{legal_moves, ConstraintSide, GrundyTable, Position};

fn parse_move(line: &str) -> Option<(u64, ConstraintSide)> {
    let mut parts = line.split_whitespace();
    let take = parts.next()?.parse().ok()?;
    let side = parts.next()?.parse().ok()?;
    parts.next().is_none().then_some((take, side))
}

pub fn run<R: BufRead, W: Write>(
    table: &GrundyTable,
    start: Position,
    mut input: R,
    mut out: W,
) -> io::Result<()> {
    let rules = table.rules();
    let mut pos = start;
    writeln!(out, "Playing {rules}, starting at {pos}. You move first.")?;
    writeln!(
        out,
        "Enter `<stones> <base|comp>` to move and constrain the engine, or `q` to quit."
    )?;
    loop {
        let moves = legal_moves(rules, pos);
        if moves.is_empty() {
            writeln!(out, "You have no legal move from {pos}. You lose.")?;
            return Ok(());
        }
        writeln!(
            out,
            "Position {pos}, value {}. Legal moves: {moves:?}",
            table.get(pos)
        )?;
        write!(out, "> ")?;
        out.flush()?;

        let mut line = String::new();
        if input.read_line(&mut line)? == 0 {
            writeln!(out)?;
            return Ok(());
        }
        let line = line.trim();
        if matches!(line, "q" | "quit" | "exit") {
            writeln!(out, "Bye.")?;
            return Ok(());
        }
        let Some((take, constrain)) = parse_move(line) else {
            writeln!(out, "Could not read `{line}`; expected e.g. `2 comp`.")?;
            continue;
        };
        if !moves.contains(&take) {
            writeln!(out, "Illegal move {take}; choose one of {moves:?}.")?;
            continue;
        }
        pos = Position::new(pos.n - take, constrain);

        let Some(reply) = table.reply(pos) else {
            writeln!(out, "The engine has no legal move from {pos}. You win!")?;
            return Ok(());
        };
        pos = Position::new(pos.n - reply.take, reply.constrain);
        writeln!(out, "Engine: {reply}.")?;
    }
}
