from cyclodiff.cli import cli

if __name__ == "__main__":
    # Configuration comes from .env / CYCLODIFF_* variables, flags override it
    cli()
