//! Full energy ranking of a category, rendered as CSV and LaTeX.

use sidigraph::ordering::Category;
use sidigraph::report::{render_table, Format};

fn main() -> sidigraph::Result<()> {
    print!("{}", render_table(12, Category::EvenEven, Format::Csv)?);
    println!();
    print!("{}", render_table(9, Category::Mixed, Format::Latex)?);
    Ok(())
}
