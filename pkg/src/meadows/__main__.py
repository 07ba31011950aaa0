from meadows.cli import main

main()
